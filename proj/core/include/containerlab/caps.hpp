#pragma once

#include <cstdint>
#include <cstdlib>

namespace clab {

/// Feasibility caps for the exhaustive kernels. Defaults keep every run at
/// desk scale; CONTAINERLAB_CAP raises or lowers the enumeration budget
/// globally, the CLI can override individual fields.
struct Caps {
    std::uint64_t enumeration_budget = 1'000'000'000ULL;  // nodes/leaves a search may touch
    int exact_subgraph_vertices = 24;       // branch-and-bound subgraph oracle
    int exhaustive_container_vertices = 24; // container-family enumeration
    int hypergraph_vertices = 100'000;      // metric hypergraph r*C(n,2)
    int labelled_count_vertices = 7;        // labelled graph counting
    int max_indep_exact_cells = 24;         // exact no-empty-column maximum, r*C(n,2)
    int graph_vertices = 128;               // hard bit-adjacency limit
};

inline Caps caps_from_env() {
    Caps caps;
    if (const char* s = std::getenv("CONTAINERLAB_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) caps.enumeration_budget = v;
    }
    return caps;
}

inline Caps& global_caps() {
    static Caps caps = caps_from_env();
    return caps;
}

}  // namespace clab
