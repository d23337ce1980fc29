#pragma once

#include <bit>
#include <cstdint>

namespace clab {

/// Fixed 128-bit vertex set. Everything graph-side lives on at most 128
/// vertices, so two words cover the universe.
struct Bits128 {
    std::uint64_t w0 = 0;
    std::uint64_t w1 = 0;

    static Bits128 all_below(int n) {
        Bits128 b;
        if (n >= 64) {
            b.w0 = ~0ULL;
            b.w1 = (n >= 128) ? ~0ULL : ((n == 64) ? 0ULL : ((1ULL << (n - 64)) - 1));
        } else {
            b.w0 = (n <= 0) ? 0ULL : ((n == 64) ? ~0ULL : ((1ULL << n) - 1));
        }
        return b;
    }

    void set(int i) { (i < 64 ? w0 : w1) |= 1ULL << (i & 63); }
    void reset(int i) { (i < 64 ? w0 : w1) &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return ((i < 64 ? w0 : w1) >> (i & 63)) & 1ULL; }

    int count() const { return std::popcount(w0) + std::popcount(w1); }
    bool any() const { return (w0 | w1) != 0; }
    bool none() const { return (w0 | w1) == 0; }

    /// Index of the lowest set bit, or 128 when empty.
    int first() const {
        if (w0) return std::countr_zero(w0);
        if (w1) return 64 + std::countr_zero(w1);
        return 128;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t w = w0; w; w &= w - 1) f(std::countr_zero(w));
        for (std::uint64_t w = w1; w; w &= w - 1) f(64 + std::countr_zero(w));
    }

    bool intersects(const Bits128& o) const { return (w0 & o.w0) | (w1 & o.w1); }
    bool contains(const Bits128& o) const { return (o.w0 & ~w0) == 0 && (o.w1 & ~w1) == 0; }

    friend Bits128 operator&(Bits128 a, Bits128 b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
    friend Bits128 operator|(Bits128 a, Bits128 b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
    friend Bits128 operator^(Bits128 a, Bits128 b) { return {a.w0 ^ b.w0, a.w1 ^ b.w1}; }
    /// a minus b (set difference).
    friend Bits128 operator-(Bits128 a, Bits128 b) { return {a.w0 & ~b.w0, a.w1 & ~b.w1}; }

    Bits128& operator&=(Bits128 o) { w0 &= o.w0; w1 &= o.w1; return *this; }
    Bits128& operator|=(Bits128 o) { w0 |= o.w0; w1 |= o.w1; return *this; }
    Bits128& operator-=(Bits128 o) { w0 &= ~o.w0; w1 &= ~o.w1; return *this; }

    bool operator==(const Bits128&) const = default;
};

}  // namespace clab
