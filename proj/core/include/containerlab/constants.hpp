#pragma once

namespace clab {

/// Binary entropy, -y log2 y - (1-y) log2(1-y), with H(0)=H(1)=0.
double binary_entropy(double y);

struct EntropyRatioMax {
    double gamma = 0.0;  // (2/3) max_{x in (0,1)} H(x^2)/x
    double x = 0.0;      // the maximizer, the c* constant
};

/// Maximizes (2/3) H(x^2)/x over (0,1) by golden-section to 1e-9 after
/// confirming unimodality on a 10^4-point grid.
EntropyRatioMax maximize_entropy_ratio();

}  // namespace clab
