#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "containerlab/bigint.hpp"
#include "containerlab/container.hpp"
#include "containerlab/graph.hpp"

namespace clab {

struct ConstantsReport {
    double gamma = 0.0;     // (2/3) max H(x^2)/x
    double c_star = 0.0;    // the maximizer
    double argmax_x = 0.0;  // same value, kept for report symmetry
};

ConstantsReport gamma_and_cstar();

/// Number of labelled C4-free graphs on n vertices, exact.
BigUint count_c4_free_graphs(int n, int workers = 1);

/// (gamma - delta) n^{3/2}.
double entropy_count_bound(int n, double delta);

enum class ExperimentMode { Auto, Exact, Heuristic };

struct ExperimentSummary {
    int n = 0;
    double p = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string mode;
    std::vector<int> exact_sizes;      // empty in heuristic mode
    std::vector<int> heuristic_sizes;  // always filled
    int max_size = 0;
    double mean_size = 0.0;
    double threshold_additive = 0.0;  // (1/2 - 0.028) n^{3/2}
    double threshold_sqrtp = 0.0;     // (2/3) sqrt(p) n^{3/2}
};

/// Per trial, samples G(n,p) and measures the largest C4-free subgraph,
/// exactly up to the cap and by seeded greedy plus local search above it.
ExperimentSummary c4_random_experiment(int n, double p, int trials, std::uint64_t seed,
                                       ExperimentMode mode = ExperimentMode::Auto,
                                       int workers = 1);

/// Greedy edge insertion in seeded random order rejecting common-neighbor
/// conflicts, plus restart-style local search. Lower bound witness.
ExtremalSubgraph max_c4_free_subgraph_heuristic(const Graph& g, std::uint64_t seed);

/// Compact description of a C4-free subgraph H of a host: a vertex prefix Y
/// picked by the min-degree split scan, a sparsifier F of H[X], the degrees
/// of Y into X and within Y, and a container index per Y-vertex into a
/// family built on F squared.
struct Certificate {
    std::vector<int> y;               // ordering prefix
    Bits128 y_mask;
    Bits128 x_mask;
    SparsifierResult f;
    std::vector<int> deg_into_x;      // d_j = |N(v_j) cap X|
    std::vector<int> deg_within_y;    // |N(v_j) cap Y|, detects Y-side edits
    std::vector<int> container_index; // r_j into the family below
    std::vector<Fingerprint> fingerprints;
    std::vector<Bits128> containers;
    int stop_size = 0;
    double delta = 0.0;
    double epsilon = 0.0;
    bool fallback_split = false;  // no index in (delta n/2, delta n) qualified
};

Certificate build_certificate(const Graph& host, const Graph& h, double delta, double epsilon,
                              double t, std::uint64_t seed = 0);

/// Recomputes every certificate obligation; false on the first mismatch.
bool verify_certificate(const Graph& host, const Graph& h, const Certificate& cert);

struct ExcessReport {
    std::vector<int> positions;  // 0-based positions in the ordering
    double excess_sum = 0.0;     // D
    long long m_prime = 0;       // ceil of the summed container means
    long long k = 0;             // tail threshold fed to the bound
    double tail_bound = 1.0;
};

/// I = positions with d* > (suffix)p/d*, D their total excess, plus the
/// relative-entropy tail bound on a binomial exceeding its mean by D.
ExcessReport excess_degree_report(const Graph& h, const VertexOrdering& ordering, double p);

/// exp(-m KL(k/m || p)) for k/m > p, else 1.
double chernoff_upper_tail(long long k, long long m, double p);

struct BlowupGraph {
    Graph base;
    Graph result;
    std::uint64_t seed = 0;
    bool full_matchings = false;
};

/// Doubles every vertex of a C4-free base and replaces each edge by a
/// matching between the doubled pairs (random size, or perfect when
/// full_matchings). The result is checked C4-free.
BlowupGraph doubled_matching_blowup(const Graph& g0, std::uint64_t seed, bool full_matchings);

struct OverlapCurve {
    std::vector<double> p;
    std::vector<double> g;  // expected-overlap advantage per unit n^{3/2}
    double p0 = 0.0;        // positive root of g, bisected to 1e-8
};

OverlapCurve expected_overlap_curve(std::span<const double> p_grid);

struct RegularThresholdRow {
    int d = 0;
    double edge_demand = 0.0;   // d n
    double place_supply = 0.0;  // p n^2 / d
};

struct RegularThresholdReport {
    double threshold = 0.0;  // sqrt(p n)
    std::vector<RegularThresholdRow> rows;
};

RegularThresholdReport regular_threshold(int n, double p);

struct ManyEdgesAudit {
    long long e_xy = 0;
    long long e_x = 0;
    long long e_y = 0;
    double threshold = 0.0;  // (1-gamma) delta n^{3/2}
    bool ok = false;         // report-only at desk scale
};

ManyEdgesAudit manyedges_audit(const Graph& h, double delta, double gamma, double c);

struct KkFreeDemo {
    BigUint count;
    long long turan = 0;      // ex(n, K_k) via the balanced (k-1)-partite graph
    double log2_ratio = 0.0;  // log2(count) / turan
};

KkFreeDemo kkfree_demo(int n, int k);

}  // namespace clab
