#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "containerlab/bigint.hpp"
#include "containerlab/bits.hpp"
#include "containerlab/errors.hpp"
#include "containerlab/hypergraph.hpp"
#include "containerlab/rng.hpp"

using namespace clab;

TEST_CASE("Bits128 basics across the word boundary") {
    Bits128 b;
    CHECK(b.none());
    b.set(3);
    b.set(63);
    b.set(64);
    b.set(127);
    CHECK(b.count() == 4);
    CHECK(b.test(64));
    CHECK_FALSE(b.test(65));
    CHECK(b.first() == 3);
    b.reset(3);
    CHECK(b.first() == 63);

    const Bits128 lo = Bits128::all_below(64);
    CHECK(lo.count() == 64);
    CHECK(Bits128::all_below(128).count() == 128);
    CHECK(Bits128::all_below(70).count() == 70);
    CHECK(Bits128::all_below(0).none());

    Bits128 c = Bits128::all_below(10);
    Bits128 d = Bits128::all_below(5);
    CHECK((c - d).count() == 5);
    CHECK(c.contains(d));
    CHECK_FALSE(d.contains(c));
    int visited = 0;
    (c - d).for_each([&](int v) {
        CHECK(v >= 5);
        CHECK(v < 10);
        ++visited;
    });
    CHECK(visited == 5);
}

TEST_CASE("SplitMix64 is deterministic and next_below is in range") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    SplitMix64 r(7);
    for (int i = 0; i < 1000; ++i) {
        const double x = r.next_double();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(r.next_below(10) < 10);
    }
}

TEST_CASE("derived seeds differ per task and ignore worker layout") {
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) seen.insert(derive_seed(123456789, i));
    CHECK(seen.size() == 1000);
    CHECK(derive_seed(1, 5) == derive_seed(1, 5));
    CHECK(derive_seed(1, 5) != derive_seed(2, 5));
}

TEST_CASE("BigUint arithmetic against 64-bit ground truth") {
    CHECK(BigUint{0}.to_string() == "0");
    CHECK(BigUint{123456789}.to_string() == "123456789");
    CHECK((BigUint{1} + BigUint{2}).to_u64() == 3);
    CHECK((BigUint{~0ULL} + BigUint{1}).to_string() == "18446744073709551616");

    BigUint a{1000000007ULL};
    const BigUint b = a * a;  // fits 64 bits
    CHECK(b.to_u64() == 1000000007ULL * 1000000007ULL);

    CHECK(BigUint::pow(2, 64).to_string() == "18446744073709551616");
    CHECK(BigUint::pow(5, 28).to_string() == "37252902984619140625");
    CHECK(BigUint::pow(3, 15).to_u64() == 14348907ULL);

    CHECK(BigUint::binomial(10, 3).to_u64() == 120);
    CHECK(BigUint::binomial(100, 50).to_string() == BigUint::from_decimal("100891344545564193334812497256").to_string());

    CHECK(BigUint{100} < BigUint{101});
    CHECK(BigUint::pow(2, 100) > BigUint::pow(2, 99));
    CHECK(BigUint::pow(7, 0).to_u64() == 1);
}

TEST_CASE("BigUint log2 is sharp") {
    CHECK(BigUint::pow(2, 200).log2() == doctest::Approx(200.0).epsilon(1e-12));
    CHECK(BigUint{54}.log2() == doctest::Approx(std::log2(54.0)).epsilon(1e-12));
    const double l = BigUint::pow(10, 50).log2();
    CHECK(l == doctest::Approx(50.0 * std::log2(10.0)).epsilon(1e-12));
}

TEST_CASE("Rational reduces and evaluates") {
    const Rational r(6, 4);
    CHECK(r.num == 3);
    CHECK(r.den == 2);
    CHECK(r.value() == doctest::Approx(1.5));
    CHECK_THROWS_AS(Rational(1, 0), InvalidArgumentError);
}
