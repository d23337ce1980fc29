#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace clab {

/// Runs fn(block) for every block in [0, blocks). Each block writes into its
/// own slot, so the caller reduces in block order afterwards and the result
/// does not depend on scheduling or on the worker count.
template <class Fn>
void parallel_blocks(int blocks, int workers, Fn&& fn) {
    if (blocks <= 0) return;
    if (workers > blocks) workers = blocks;
    if (workers <= 1) {
        for (int b = 0; b < blocks; ++b) fn(b);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int b = next.fetch_add(1, std::memory_order_relaxed);
                if (b >= blocks) return;
                fn(b);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace clab
