#pragma once

// Brute-force reference implementations used only by the test suites. Each
// oracle takes the slow, definition-literal route on purpose so it shares no
// logic with the library path it checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "containerlab/graph.hpp"

namespace oracle {

// square by the definition: xy adjacent iff some z sees both
inline clab::Graph square_naive(const clab::Graph& g) {
    clab::Graph sq(g.n());
    for (int x = 0; x < g.n(); ++x) {
        for (int y = x + 1; y < g.n(); ++y) {
            for (int z = 0; z < g.n(); ++z) {
                if (z != x && z != y && g.has_edge(x, z) && g.has_edge(z, y)) {
                    sq.add_edge(x, y);
                    break;
                }
            }
        }
    }
    return sq;
}

// four distinct vertices carrying a 4-cycle as a subgraph, checked literally
inline bool has_c4_naive(const clab::Graph& g) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
                        g.has_edge(d, a))
                        return true;
                }
    return false;
}

// maximum C4-free edge subset over all 2^m subsets; m must stay small
inline int max_c4_free_subset_naive(const clab::Graph& g) {
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        clab::Graph h(g.n());
        for (int i = 0; i < m; ++i) {
            if ((mask >> i) & 1U) h.add_edge(edges[static_cast<std::size_t>(i)].first,
                                             edges[static_cast<std::size_t>(i)].second);
        }
        if (!has_c4_naive(h)) best = std::max<int>(best, std::popcount(mask));
    }
    return best;
}

// all independent sets of g as bitmasks, n <= 20
inline std::vector<std::uint32_t> independent_sets_naive(const clab::Graph& g) {
    std::vector<std::uint32_t> out;
    const auto edges = g.edges();
    for (std::uint32_t mask = 0; mask < (1U << g.n()); ++mask) {
        bool ok = true;
        for (const auto& [u, v] : edges) {
            if (((mask >> u) & 1U) && ((mask >> v) & 1U)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(mask);
    }
    return out;
}

inline clab::Bits128 bits_of_mask(std::uint32_t mask) {
    clab::Bits128 b;
    for (int i = 0; i < 32; ++i)
        if ((mask >> i) & 1U) b.set(i);
    return b;
}

}  // namespace oracle
