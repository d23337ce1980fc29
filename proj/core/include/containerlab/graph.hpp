#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "containerlab/bits.hpp"
#include "containerlab/caps.hpp"

namespace clab {

/// Dense simple graph on at most 128 vertices, symmetric bit-adjacency rows.
/// Values are treated as immutable once built; every consumer takes const
/// references and may share a graph across threads freely.
class Graph {
public:
    /// Empty placeholder value; real graphs have 1..128 vertices.
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph read(std::istream& in);

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

    int n() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
    const Bits128& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    Bits128 vertex_mask() const { return Bits128::all_below(n_); }

    /// Same vertex ids, but only edges with both endpoints in keep.
    Graph restricted_to(Bits128 keep) const;

    /// Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    std::uint64_t hash() const;

    /// "n=<int>" header, then one "u v" line per edge, 0-indexed, u < v,
    /// lexicographic. Deterministic byte-for-byte.
    void write(std::ostream& out) const;
    std::string to_string() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bits128> adj_;
};

struct VertexOrdering {
    std::vector<int> order;          // permutation of [n]
    std::vector<int> right_degrees;  // d_i* = degree of order[i] among later vertices
};

struct BipartitionSplit {
    Bits128 y;
    Bits128 x;
    long long e_xy = 0;
    long long e_x = 0;
    long long e_y = 0;
};

struct DegreeSquareAudit {
    long long sum = 0;   // sum of squared degrees
    double bound = 0.0;  // n^2 + 2 n^{3/2}
    bool ok = false;
};

struct ExtremalSubgraph {
    std::vector<std::pair<int, int>> edges;
    int size = 0;
};

std::vector<int> identity_permutation(int n);

/// xy is an edge iff some z is adjacent to both x and y.
Graph proper_square(const Graph& g);

/// True iff no pair of vertices has two or more common neighbors.
bool is_c4_free(const Graph& g);

/// Number of paths of length two: sum over v of C(d(v), 2).
long long cherry_count(const Graph& g);

/// Requires a C4-free input; checks sum d_i^2 <= n^2 + 2 n^{3/2}.
DegreeSquareAudit degree_square_audit(const Graph& g);

/// G(n,p): every pair kept independently with probability p, seeded.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Repeatedly extract a vertex of minimum degree in the residual graph,
/// breaking ties by the earliest position in `tiebreak` (identity when empty).
VertexOrdering min_degree_ordering(const Graph& g, std::span<const int> tiebreak = {});

/// Y = first prefix_len vertices of the ordering, X = rest, with edge counts.
BipartitionSplit split_prefix(const Graph& g, const VertexOrdering& ord, int prefix_len);

/// Maximum-cardinality C4-free edge subset by branch and bound. Exact.
ExtremalSubgraph max_c4_free_subgraph_exact(const Graph& g, int vertex_cap = global_caps().exact_subgraph_vertices);

/// Orthogonality graph on the points of PG(2,q), self-loops dropped.
/// Supported q: 2, 3, 4, 5, 7, 8, 9.
Graph polarity_graph(int q);

}  // namespace clab
