#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace clab {

/// Unsigned big integer for exact counts. The labelled-graph and coloring
/// counters overflow 64 bits well inside the tested range (m(r)^C(n,2)
/// already needs ~65 bits at n=8, r=8), so counts are exact integers
/// throughout and only rendered to double for logarithmic comparisons.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v);  // NOLINT: implicit by design, counts start small

    static BigUint pow(std::uint64_t base, unsigned exp);
    static BigUint binomial(unsigned n, unsigned k);
    static BigUint from_decimal(const std::string& s);

    BigUint& operator+=(const BigUint& o);
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    BigUint& operator*=(std::uint32_t m);
    friend BigUint operator*(BigUint a, std::uint32_t m) { return a *= m; }
    BigUint operator*(const BigUint& o) const;

    std::strong_ordering operator<=>(const BigUint& o) const;
    bool operator==(const BigUint& o) const = default;

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // throws on overflow

    /// log2 of the value, accurate to ~1e-15 relative; -inf for zero.
    double log2() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<std::uint32_t> limbs_;  // little-endian base 2^32
};

}  // namespace clab
