#include "containerlab/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "containerlab/errors.hpp"

namespace clab {

BigUint::BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& o) {
    const std::size_t n = std::max(limbs_.size(), o.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry + limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator*=(std::uint32_t m) {
    if (m == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        const std::uint64_t p = static_cast<std::uint64_t>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(p);
        carry = p >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
    BigUint r;
    if (is_zero() || o.is_zero()) return r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            const std::uint64_t p = static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] +
                                    r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(p);
            carry = p >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            const std::uint64_t p = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(p);
            carry = p >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

std::strong_ordering BigUint::operator<=>(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    }
    return std::strong_ordering::equal;
}

BigUint BigUint::pow(std::uint64_t base, unsigned exp) {
    BigUint r{1};
    BigUint b{base};
    while (exp) {
        if (exp & 1U) r = r * b;
        b = b * b;
        exp >>= 1U;
    }
    return r;
}

BigUint BigUint::binomial(unsigned n, unsigned k) {
    if (k > n) return BigUint{};
    if (k > n - k) k = n - k;
    // numerator built as a product, each division by i+1 stays exact
    BigUint r{1};
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        // exact small division
        std::uint64_t rem = 0;
        const std::uint32_t d = i + 1;
        for (std::size_t j = r.limbs_.size(); j-- > 0;) {
            const std::uint64_t cur = (rem << 32) | r.limbs_[j];
            r.limbs_[j] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        r.trim();
    }
    return r;
}

BigUint BigUint::from_decimal(const std::string& s) {
    BigUint r;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw InvalidArgumentError("bad decimal digit");
        r *= 10U;
        r += BigUint{static_cast<std::uint64_t>(ch - '0')};
    }
    return r;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw InvalidArgumentError("BigUint does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

double BigUint::log2() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    // top 96 bits are more than enough mantissa
    const std::size_t top = limbs_.size() - 1;
    long double mant = static_cast<long double>(limbs_[top]);
    if (top >= 1) mant += static_cast<long double>(limbs_[top - 1]) / 4294967296.0L;
    if (top >= 2) mant += static_cast<long double>(limbs_[top - 2]) / (4294967296.0L * 4294967296.0L);
    return static_cast<double>(std::log2(mant) + 32.0L * static_cast<long double>(top));
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            out.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
            if (work.empty() && rem == 0) break;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace clab
