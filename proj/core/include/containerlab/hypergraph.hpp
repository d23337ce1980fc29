#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <span>
#include <vector>

namespace clab {

/// Exact rational, enough for average degrees (3e/N) and their comparisons.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// 3-uniform hypergraph. Edges are stored as ascending triples in global
/// lexicographic order, duplicates collapsed; that makes the serialization
/// canonical and membership a binary search.
class Hypergraph3 {
public:
    explicit Hypergraph3(int vertex_count);

    void add_edge(std::uint32_t a, std::uint32_t b, std::uint32_t c);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const {
        normalize();
        return edges_.size();
    }
    const std::vector<std::array<std::uint32_t, 3>>& edges() const {
        normalize();
        return edges_;
    }
    bool has_edge(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

    /// "N=<int>" header, then one "a b c" line per edge, ascending.
    void write(std::ostream& out) const;
    static Hypergraph3 read(std::istream& in);

private:
    int n_ = 0;
    mutable bool dirty_ = false;
    mutable std::vector<std::array<std::uint32_t, 3>> edges_;
    void normalize() const;
};

struct DegreeStats {
    long long delta1 = 0;  // max edges through a vertex
    long long delta2 = 0;  // max edges through a pair
    long long delta3 = 0;  // max edges through a triple (0 or 1 here)
    Rational dbar;         // average degree 3e/N, exact
};

struct ContainerHypotheses {
    double p = 0.0;
    double alpha = 0.0;
    int c = 1;
    double delta_hp = 0.0;
    double container_log_bound = 0.0;  // 3^9 c (1+ln(1/alpha)) N p ln(1/p)
    bool p_ok = false;
    bool delta_ok = false;
    bool ok = false;
};

/// Exact maximum co-degrees by exhaustive scan over the edge set.
DegreeStats degree_stats(const Hypergraph3& h);

/// 4*Delta2/(dbar*p) + 2*Delta3/(dbar*p^2).
double delta_hp(const Hypergraph3& h, double p);
double delta_hp(const DegreeStats& stats, double p);

/// Checks p <= 1/(3^6 c) and Delta(H,p) <= alpha/(27 c); always returns the
/// full bundle including the container-count bound.
ContainerHypotheses hypotheses_check(const Hypergraph3& h, double p, double alpha, int c);

/// True iff no edge lies wholly inside S.
bool is_independent(const Hypergraph3& h, std::span<const std::uint32_t> s);

/// Number of edges wholly inside S.
long long edges_within(const Hypergraph3& h, std::span<const std::uint32_t> s);

}  // namespace clab
