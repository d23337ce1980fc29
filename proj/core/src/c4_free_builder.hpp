#pragma once

#include <vector>

#include "containerlab/bits.hpp"

namespace clab::detail {

/// Incremental C4-free edge insertion. An edge (u,v) is admissible iff no
/// neighbor of v already shares a neighbor with u and vice versa; that keeps
/// every pair's common-neighborhood at size at most one.
struct C4FreeBuilder {
    std::vector<Bits128> adj;

    explicit C4FreeBuilder(int n) : adj(static_cast<std::size_t>(n)) {}

    bool can_add(int u, int v) const {
        bool ok = true;
        adj[static_cast<std::size_t>(v)].for_each([&](int x) {
            if (x != u && adj[static_cast<std::size_t>(u)].intersects(adj[static_cast<std::size_t>(x)]))
                ok = false;
        });
        if (!ok) return false;
        adj[static_cast<std::size_t>(u)].for_each([&](int y) {
            if (y != v && adj[static_cast<std::size_t>(v)].intersects(adj[static_cast<std::size_t>(y)]))
                ok = false;
        });
        return ok;
    }

    void add(int u, int v) {
        adj[static_cast<std::size_t>(u)].set(v);
        adj[static_cast<std::size_t>(v)].set(u);
    }

    void remove(int u, int v) {
        adj[static_cast<std::size_t>(u)].reset(v);
        adj[static_cast<std::size_t>(v)].reset(u);
    }

    bool try_add(int u, int v) {
        if (!can_add(u, v)) return false;
        add(u, v);
        return true;
    }
};

}  // namespace clab::detail
