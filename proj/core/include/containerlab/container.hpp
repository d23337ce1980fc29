#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "containerlab/bits.hpp"
#include "containerlab/caps.hpp"
#include "containerlab/graph.hpp"

namespace clab {

/// The certificate of an independent set: vertices in the order the greedy
/// algorithm committed them. Replaying the fingerprint reproduces the
/// container exactly, so the fingerprint is the identity of a container
/// (two fingerprints with equal vertex sets stay distinct).
struct Fingerprint {
    std::vector<int> vertices;
    bool operator==(const Fingerprint&) const = default;
    auto operator<=>(const Fingerprint&) const = default;
};

struct GreedyContainerResult {
    Fingerprint fingerprint;          // T(I)
    Bits128 container;                // C = T union surviving A
    std::vector<int> removal_counts;  // vertices dropped from A per step, logged
};

struct ContainerFamily {
    std::map<std::vector<int>, Bits128> members;  // fingerprint -> container
    std::uint64_t graph_hash = 0;
    std::vector<int> tiebreak;
    int stop_size = 0;

    /// Header with graph hash / tiebreak / stop rule, then one record per
    /// fingerprint: "T: v1,...,vk | C: sorted vertex list".
    void write(std::ostream& out) const;
};

struct SparsifierResult {
    Graph f;
    double t = 1.0;  // keep probability is 1/t
    std::uint64_t seed = 0;
};

struct RightContainerEntry {
    int position = 0;       // 0-based index into the ordering
    int vertex = -1;
    int suffix_size = 0;    // m = n - position
    int right_degree = 0;   // d* of the vertex
    bool shortcut = false;  // d* < sqrt(m)/log^2 m, trivial container stored
    Fingerprint fingerprint;
    Bits128 container;            // superset of the right-neighborhood
    long long degree_measure = 0; // sum over container of residual degrees
    double measure_bound = 0.0;   // (1+eps^2) * m
    bool measure_ok = false;
};

struct RightContainerSet {
    VertexOrdering ordering;
    double epsilon = 0.0;
    int audited_prefix = 0;  // entries exist for positions < audited_prefix
    std::vector<RightContainerEntry> entries;
};

struct AliveAudit {
    int position = 0;
    int alive_in_container = 0;
    bool fewlarge_applies = false;  // non-win position in the audited prefix
    double fewlarge_bound = 0.0;    // sqrt(eps * m)
    bool fewlarge_ok = true;
    double global_bound = 0.0;      // 10 sqrt(n)
    bool global_ok = true;
};

struct VertexClassification {
    double epsilon = 0.0;
    double c_star = 0.0;
    std::vector<bool> win;    // by ordering position
    Bits128 large;            // d_v > (1+30 sqrt(eps)) c* sqrt(n)
    Bits128 huge;             // d_v > sqrt(n)
    Bits128 alive1;           // 1-alive: degree in G exceeds the i=1 threshold
    std::vector<AliveAudit> audits;
    bool nesting_ok = true;   // huge within large within alive1
};

/// Greedy fingerprint/container construction. Universe defaults to all of
/// the square's vertices; pass a sub-universe to run on an induced part.
/// Loop: take the max-degree vertex v of square[A] (ties by tiebreak);
/// members of I go to T and lose their neighborhood, non-members just leave
/// A; stops once |A| <= stop_size. Guarantees T subset of I subset of C.
GreedyContainerResult greedy_container(const Graph& square, Bits128 independent_set,
                      std::span<const int> tiebreak, int stop_size,
                      Bits128 universe = {~0ULL, ~0ULL});

/// Replays the algorithm answering membership queries from the fingerprint;
/// the result depends on T only, never on which I produced it.
Bits128 container_for_fingerprint(const Graph& square, const Fingerprint& t,
                                  std::span<const int> tiebreak, int stop_size,
                                  Bits128 universe = {~0ULL, ~0ULL});

/// Walks the member/non-member decision tree and emits every reachable
/// (T, C) pair; the family covers every independent set of the square.
ContainerFamily enumerate_all_containers(const Graph& square, std::span<const int> tiebreak,
                                         int stop_size, int max_fingerprint,
                                         Bits128 universe = {~0ULL, ~0ULL});

/// Keeps each edge independently with probability 1/t, deterministically.
SparsifierResult sparsify(const Graph& g, double t, std::uint64_t seed);

/// For each position i in the first (1-eps) fraction of a min-degree
/// ordering, builds a container for the right-neighborhood of v_i on the
/// square of the residual graph, then keeps extending the fingerprint while
/// the degree measure exceeds (1+eps^2)(n-i+1). Small right-degrees take the
/// trivial-container shortcut.
RightContainerSet build_right_containers(const Graph& g, double epsilon,
                                         std::span<const int> tiebreak = {});

/// Win / large / huge / i-alive classification with the per-container
/// alive-count audits. Violations are reported, not thrown.
VertexClassification classify_vertices(const Graph& g, const VertexOrdering& ordering,
                                       const RightContainerSet& rc, double epsilon);

/// Stop-rule presets; log factors are natural logs.
int stop_preset_n35(int m);                  // ceil(m^{3/5})
int stop_preset_three_sqrt(int m);           // ceil(3 sqrt(m))
int stop_preset_b_sqrt(double b, int n);         // ceil((1+3b) sqrt(n))

}  // namespace clab
