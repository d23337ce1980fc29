#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "containerlab/bigint.hpp"
#include "containerlab/hypergraph.hpp"

namespace clab {

/// ceil((r+1)/2): the number of colors an edge can take in the dominant
/// family of metric colorings.
int m_of_r(int r);

/// Assignment of a color in [1..r] to every edge of K_n, stored in column
/// (pair) order.
struct MetricColoring {
    int n = 0;
    int r = 0;
    std::vector<int> colors;  // size C(n,2), values 1..r

    /// "n r" header then the C(n,2) colors in column order.
    void write(std::ostream& out) const;
    static MetricColoring read(std::istream& in);
};

/// Bijection between the pairs of [n] and columns 0..C(n,2)-1, plus the
/// (color, column) <-> vertex-id layout of the counting hypergraph. Rows are
/// colors: vertex id = (color-1)*C(n,2) + column.
class ColumnLayout {
public:
    ColumnLayout(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    int columns() const { return cols_; }
    int vertex_count() const { return r_ * cols_; }

    int column(int u, int v) const;
    std::pair<int, int> pair_of_column(int col) const;
    std::uint32_t vertex_id(int color, int col) const;
    int color_of(std::uint32_t vid) const { return static_cast<int>(vid) / cols_ + 1; }
    int column_of(std::uint32_t vid) const { return static_cast<int>(vid) % cols_; }

private:
    int n_ = 0;
    int r_ = 0;
    int cols_ = 0;
};

/// Vertices are (color, column) pairs; a triple is an edge iff its columns
/// form a triangle of K_n and the colors break a triangle inequality.
std::pair<Hypergraph3, ColumnLayout> build_metric_hypergraph(int n, int r);

/// All C(n,3) triples satisfy all three triangle inequalities.
bool is_metric(const MetricColoring& c);

/// Exact count of metric colorings; backtracks over edges in triangle-closing
/// order, pruning on the first violated triple.
BigUint brute_force_count(int n, int r, int workers = 1);

/// Counts one-per-column independent sets of the counting hypergraph. Must
/// equal brute_force_count; the two routes share no logic.
BigUint count_via_hypergraph(int n, int r, int workers = 1);

/// Color subsets as bitmask over [1..r]: bit i-1 stands for color i.
using ColorSet = std::uint64_t;

struct LocalCriterionResult {
    bool violation_free = false;
    int size_sum = 0;
    int bound = 0;    // 3 m(r), +1 when r is odd
    bool bound_ok = false;  // vacuously true when a violation exists
};

LocalCriterionResult local_criterion_check(ColorSet a, ColorSet b, ColorSet c, int r);

struct MaxIndependentAudit {
    long long max_size = 0;
    long long bound = 0;              // m(r) C(n,2), + rn when r is odd
    long long conjectured_bound = 0;  // m(r) C(n,2) + n/2 for odd r, reported only
    bool ok = false;
    bool exact = false;  // false when the sampling fallback produced max_size
};

/// Largest no-empty-column independent set of the counting hypergraph,
/// exact while r*C(n,2) fits the cap, sampled (a lower bound) above it.
MaxIndependentAudit max_independent_audit(int n, int r);

struct SupersaturationAudit {
    long long edge_count = 0;
    double required = 0.0;
    bool ok = false;
    bool asserted = false;  // odd r below the configured n stays report-only
    double epsilon = 0.0;
};

SupersaturationAudit supersaturation_audit(int n, int r, double epsilon,
                                           std::span<const std::uint32_t> s,
                                           int odd_assert_min_n = -1);

struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    long long smallest_n = -1;  // smallest n where the inequality holds, -1 unknown
};

struct DiscreteChainParameters {
    int n = 0;
    int r = 0;
    double delta = 0.0;
    int c = 1;
    double p = 0.0;
    double alpha = 0.0;
    bool exact_stats = false;  // hypergraph was small enough to measure
    DegreeStats stats;         // meaningful when exact_stats
    std::vector<InequalityCheck> chain;
};

/// p = 1/(r ln^{2+delta} n), alpha = 1e10 c ln^{4+2delta} n / n, and every
/// displayed inequality of the discrete parameter chain evaluated
/// numerically, with the smallest n at which each starts to hold.
DiscreteChainParameters discrete_chain_parameters(int n, int r, double delta, int c);

struct PolytopeEstimate {
    int n = 0;
    long long samples = 0;
    long long hits = 0;
    double rate = 0.0;      // hits/samples
    double estimate = 0.0;  // rate^{1/C(n,2)}
    double ci_low = 0.0;    // 95% normal-approximation interval on the estimate
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    double coord_min = 0.0;  // sampling floor; 0.5 forces acceptance 1 at n=3
};

PolytopeEstimate polytope_volume_mc(int n, long long samples, std::uint64_t seed,
                                    int workers = 1, double coord_min = 0.0);

struct CeilCheck {
    bool premise = false;  // a + b >= c held, so the conclusion applies
    bool holds = false;    // ceil(a)+ceil(b) >= ceil(c); vacuously true otherwise
};

CeilCheck ceil_superadditivity(double a, double b, double c);

struct ContinuousChainReport {
    double n = 0.0;
    int r = 0;  // even integer closest to n^{1/6 - delta/2}
    double delta = 0.0;
    int c = 1;
    double p = 0.0;
    double alpha = 0.0;
    double final_bound = 0.0;  // 1/2 + n^{-(1/6 - delta)}
    std::vector<InequalityCheck> steps;
};

/// The continuous-setting parameter chain, evaluated numerically at n.
ContinuousChainReport continuous_bound_chain(double n, double delta, int c);

}  // namespace clab
