#include "containerlab/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace clab {

double binary_entropy(double y) {
    if (y <= 0.0 || y >= 1.0) return 0.0;
    return -y * std::log2(y) - (1.0 - y) * std::log2(1.0 - y);
}

namespace {

double objective(double x) { return (2.0 / 3.0) * binary_entropy(x * x) / x; }

// The finite-difference slope must change sign exactly once, + to -.
void check_unimodal() {
    constexpr int kGrid = 10000;
    const double lo = 1e-6, hi = 1.0 - 1e-6;
    int flips = 0;
    int last_sign = 0;
    double prev = objective(lo);
    for (int i = 1; i <= kGrid; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / kGrid;
        const double cur = objective(x);
        const int sign = cur > prev ? 1 : (cur < prev ? -1 : last_sign);
        if (last_sign != 0 && sign != last_sign) ++flips;
        last_sign = sign;
        prev = cur;
    }
    if (flips != 1 || last_sign != -1)
        throw std::logic_error("entropy ratio is not unimodal on (0,1); grid saw " +
                               std::to_string(flips) + " slope flips");
}

}  // namespace

EntropyRatioMax maximize_entropy_ratio() {
    static const EntropyRatioMax cached = [] {
        check_unimodal();
        const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = 1e-6, b = 1.0 - 1e-6;
        double c = b - invphi * (b - a);
        double d = a + invphi * (b - a);
        double fc = objective(c), fd = objective(d);
        while (b - a > 1e-9) {
            if (fc > fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - invphi * (b - a);
                fc = objective(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + invphi * (b - a);
                fd = objective(d);
            }
        }
        EntropyRatioMax m;
        m.x = 0.5 * (a + b);
        m.gamma = objective(m.x);
        return m;
    }();
    return cached;
}

}  // namespace clab
