#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "containerlab/errors.hpp"
#include "containerlab/metric.hpp"
#include "containerlab/rng.hpp"

using namespace clab;

namespace {

// definitional metric count: walk every coloring, check every triple
std::uint64_t count_metric_naive(int n, int r) {
    const ColumnLayout layout(n, r);
    const int cols = layout.columns();
    std::uint64_t total = 0;
    MetricColoring c{n, r, std::vector<int>(static_cast<std::size_t>(cols), 1)};
    for (;;) {
        if (is_metric(c)) ++total;
        int k = 0;
        while (k < cols && c.colors[static_cast<std::size_t>(k)] == r) {
            c.colors[static_cast<std::size_t>(k)] = 1;
            ++k;
        }
        if (k == cols) break;
        ++c.colors[static_cast<std::size_t>(k)];
    }
    return total;
}

}  // namespace

TEST_CASE("m(r) values") {
    CHECK(m_of_r(1) == 1);
    CHECK(m_of_r(2) == 2);
    CHECK(m_of_r(3) == 2);
    CHECK(m_of_r(4) == 3);
    CHECK(m_of_r(8) == 5);
    CHECK_THROWS_AS(m_of_r(0), InvalidArgumentError);
}

TEST_CASE("column layout is a bijection") {
    const ColumnLayout layout(6, 4);
    CHECK(layout.columns() == 15);
    CHECK(layout.vertex_count() == 60);
    for (int col = 0; col < layout.columns(); ++col) {
        const auto [u, v] = layout.pair_of_column(col);
        CHECK(layout.column(u, v) == col);
        CHECK(u < v);
    }
    for (int color = 1; color <= 4; ++color) {
        for (int col = 0; col < 15; ++col) {
            const std::uint32_t vid = layout.vertex_id(color, col);
            CHECK(layout.color_of(vid) == color);
            CHECK(layout.column_of(vid) == col);
        }
    }
}

TEST_CASE("metric hypergraph shapes") {
    {
        auto [h, layout] = build_metric_hypergraph(3, 2);
        CHECK(layout.vertex_count() == 6);
        CHECK(h.edge_count() == 0);  // 1+1 >= 2 always
    }
    {
        auto [h, layout] = build_metric_hypergraph(3, 3);
        (void)layout;
        CHECK(h.vertex_count() == 9);
        CHECK(h.edge_count() == 3);
    }
    {
        auto [h, layout] = build_metric_hypergraph(4, 3);
        (void)layout;
        CHECK(h.edge_count() == 12);  // 3 per triangle of K4
    }
    // closed form: 3 C(n,3) C(r,3)
    for (int n = 3; n <= 6; ++n) {
        for (int r = 1; r <= 5; ++r) {
            auto [h, layout] = build_metric_hypergraph(n, r);
            (void)layout;
            const long long expect = 3LL * (n * (n - 1) * (n - 2) / 6) * (r * (r - 1) * (r - 2) / 6);
            CHECK(static_cast<long long>(h.edge_count()) == expect);
        }
    }
}

TEST_CASE("is_metric basics") {
    MetricColoring all_equal{4, 3, std::vector<int>(6, 2)};
    CHECK(is_metric(all_equal));

    MetricColoring bad{3, 3, {1, 1, 3}};
    CHECK_FALSE(is_metric(bad));

    // colors inside [ceil(r/2), r] always work
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int r = 2 + static_cast<int>(rng.next_below(7));
        const int lo = (r + 1) / 2;
        MetricColoring c{5, r, std::vector<int>(10, 0)};
        for (auto& col : c.colors)
            col = lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(r - lo + 1)));
        CHECK(is_metric(c));
    }
}

TEST_CASE("metric status matches hypergraph independence, exhaustive n<=4 r<=3") {
    for (int n = 3; n <= 4; ++n) {
        for (int r = 1; r <= 3; ++r) {
            auto [h, layout] = build_metric_hypergraph(n, r);
            const int cols = layout.columns();
            MetricColoring c{n, r, std::vector<int>(static_cast<std::size_t>(cols), 1)};
            for (;;) {
                std::vector<std::uint32_t> vertex_set;
                for (int col = 0; col < cols; ++col)
                    vertex_set.push_back(layout.vertex_id(c.colors[static_cast<std::size_t>(col)], col));
                CHECK(is_metric(c) == is_independent(h, vertex_set));
                int k = 0;
                while (k < cols && c.colors[static_cast<std::size_t>(k)] == r) {
                    c.colors[static_cast<std::size_t>(k)] = 1;
                    ++k;
                }
                if (k == cols) break;
                ++c.colors[static_cast<std::size_t>(k)];
            }
        }
    }
}

TEST_CASE("counting: both routes, frozen values, and the naive oracle") {
    CHECK(brute_force_count(3, 1).to_u64() == 1);
    CHECK(brute_force_count(3, 2).to_u64() == 8);
    CHECK(brute_force_count(3, 3).to_u64() == 24);
    CHECK(count_via_hypergraph(3, 2).to_u64() == 8);
    CHECK(count_via_hypergraph(3, 3).to_u64() == 24);

    for (int n = 3; n <= 4; ++n) {
        for (int r = 1; r <= 3; ++r) {
            const std::uint64_t naive = count_metric_naive(n, r);
            CHECK(brute_force_count(n, r).to_u64() == naive);
            CHECK(count_via_hypergraph(n, r).to_u64() == naive);
        }
    }
    // the two production routes also agree where the naive walk is too slow
    CHECK(brute_force_count(5, 4) == count_via_hypergraph(5, 4));
    CHECK(brute_force_count(5, 5) == count_via_hypergraph(5, 5));
    CHECK(brute_force_count(6, 2) == count_via_hypergraph(6, 2));
    CHECK(brute_force_count(6, 3) == count_via_hypergraph(6, 3));

    // worker count never changes the result
    CHECK(brute_force_count(5, 3, 2) == brute_force_count(5, 3, 1));
    CHECK(count_via_hypergraph(5, 3, 2) == count_via_hypergraph(5, 3, 1));
}

TEST_CASE("counts respect the m(r)^C(n,2) lower bound") {
    for (int n = 3; n <= 5; ++n) {
        for (int r = 1; r <= 4; ++r) {
            const BigUint lower = BigUint::pow(static_cast<std::uint64_t>(m_of_r(r)),
                                               static_cast<unsigned>(n * (n - 1) / 2));
            CHECK(brute_force_count(n, r) >= lower);
        }
    }
}

TEST_CASE("enumeration budget guards the counting routes") {
    CHECK_THROWS_AS(brute_force_count(8, 8), TooLargeError);
    CHECK_THROWS_AS(count_via_hypergraph(8, 8), TooLargeError);
}

TEST_CASE("local criterion: examples and tightness") {
    // A=B={1}, C={3} at r=3 violates 1+1<3
    const LocalCriterionResult bad = local_criterion_check(0b001, 0b001, 0b100, 3);
    CHECK_FALSE(bad.violation_free);
    CHECK(bad.bound_ok);  // vacuous

    // interval [r/2, r] at even r is violation-free and tight
    for (int r = 2; r <= 8; r += 2) {
        ColorSet interval = 0;
        for (int c = r / 2; c <= r; ++c) interval |= ColorSet{1} << (c - 1);
        const LocalCriterionResult res = local_criterion_check(interval, interval, interval, r);
        CHECK(res.violation_free);
        CHECK(res.size_sum == 3 * m_of_r(r));
        CHECK(res.bound_ok);
    }

    CHECK_THROWS_AS(local_criterion_check(0, 0b1, 0b1, 3), EmptySetError);
    CHECK_THROWS_AS(local_criterion_check(0b1000, 0b1, 0b1, 3), InvalidArgumentError);

    // exhaustive scan r <= 5 (acceptance covers r = 6)
    for (int r = 1; r <= 5; ++r) {
        const ColorSet all = (ColorSet{1} << r) - 1;
        for (ColorSet a = 1; a <= all; ++a)
            for (ColorSet b = 1; b <= all; ++b)
                for (ColorSet c = 1; c <= all; ++c)
                    CHECK(local_criterion_check(a, b, c, r).bound_ok);
    }
}

TEST_CASE("maximum independent audit: exact mode") {
    {
        const MaxIndependentAudit a = max_independent_audit(3, 2);
        CHECK(a.exact);
        CHECK(a.max_size == 6);  // tight: m(2)*C(3,2)
        CHECK(a.bound == 6);
        CHECK(a.ok);
    }
    {
        const MaxIndependentAudit a = max_independent_audit(3, 1);
        CHECK(a.max_size == 3);
        CHECK(a.bound == 3);
        CHECK(a.ok);
    }
    {
        const MaxIndependentAudit a = max_independent_audit(3, 3);
        CHECK(a.exact);
        CHECK(a.bound == 2 * 3 + 9);  // odd form m(r) C(n,2) + rn
        CHECK(a.conjectured_bound == 2 * 3 + 1);
        CHECK(a.max_size == 7);  // exhaustive: {1,2,3},{2,3},{2,3}
        CHECK(a.ok);
    }
    {
        // sampling fallback above the exact cap: still a valid lower bound
        const MaxIndependentAudit a = max_independent_audit(4, 5);
        CHECK_FALSE(a.exact);
        CHECK(a.max_size >= static_cast<long long>(m_of_r(5)) * 6);
        CHECK(a.ok);
    }
}

TEST_CASE("supersaturation audit") {
    // full vertex set at n=6, r=3: |S| = 45 = (1+0.5)*15*2, so epsilon maxes
    // out at exactly 1/2
    auto [h, layout] = build_metric_hypergraph(6, 3);
    (void)h;
    std::vector<std::uint32_t> all;
    for (int v = 0; v < layout.vertex_count(); ++v) all.push_back(static_cast<std::uint32_t>(v));
    const SupersaturationAudit audit = supersaturation_audit(6, 3, 0.5, all);
    CHECK(audit.edge_count == 60);  // 3 C(6,3)
    CHECK(audit.ok);
    CHECK_FALSE(audit.asserted);  // odd r stays report-only by default
    CHECK(supersaturation_audit(6, 3, 0.5, all, 5).asserted);
    CHECK_THROWS_AS(supersaturation_audit(6, 3, 0.51, all), TooSmallSetError);

    // even r: S = everything forces eps toward 0, and eps = 0 is rejected
    auto [h2, layout2] = build_metric_hypergraph(6, 2);
    (void)h2;
    std::vector<std::uint32_t> all2;
    for (int v = 0; v < layout2.vertex_count(); ++v) all2.push_back(static_cast<std::uint32_t>(v));
    CHECK_THROWS_AS(supersaturation_audit(6, 2, 0.0, all2), InvalidArgumentError);
    CHECK_THROWS_AS(supersaturation_audit(6, 2, 0.01, all2), TooSmallSetError);

    // dropping all three colors of column 0 empties that column
    std::vector<std::uint32_t> missing_column;
    for (std::uint32_t v : all) {
        if (layout.column_of(v) != 0) missing_column.push_back(v);
    }
    CHECK_THROWS_AS(supersaturation_audit(6, 3, 0.2, missing_column), EmptyColumnError);
}

TEST_CASE("parameter chain: identities hold, report carries every inequality") {
    const DiscreteChainParameters params = discrete_chain_parameters(1000, 5, 0.1, 1);
    CHECK(params.p == doctest::Approx(1.0 / (5 * std::pow(std::log(1000.0), 2.1))));
    CHECK(params.alpha == doctest::Approx(1e10 * std::pow(std::log(1000.0), 4.2) / 1000.0));
    bool saw_p_identity = false, saw_alpha_identity = false;
    for (const auto& chk : params.chain) {
        if (chk.name == "p_identity") {
            saw_p_identity = true;
            CHECK(chk.holds);
        }
        if (chk.name == "alpha_identity") {
            saw_alpha_identity = true;
            CHECK(chk.holds);
        }
    }
    CHECK(saw_p_identity);
    CHECK(saw_alpha_identity);
    CHECK(params.chain.size() == 8);
    CHECK_FALSE(params.exact_stats);  // n=1000 is far over the build cap

    // the scan pins the first n where each hypothesis starts holding; the
    // p-condition needs r ln^{2+delta} n >= 729, far beyond desk scale
    for (const auto& chk : params.chain) {
        if (chk.name == "p_upper") {
            CHECK(chk.smallest_n > 1000);
            const double l = std::pow(std::log(static_cast<double>(chk.smallest_n)), 2.1);
            CHECK(5.0 * l >= 729.0);
            const double l_prev = std::pow(std::log(static_cast<double>(chk.smallest_n - 1)), 2.1);
            CHECK(5.0 * l_prev < 729.0);
        }
        if (chk.name == "display_vs_alpha") CHECK(chk.smallest_n == 3);
    }

    const DiscreteChainParameters small = discrete_chain_parameters(8, 3, 0.1, 1);
    CHECK(small.exact_stats);
    CHECK(small.stats.delta2 <= 3);
}

TEST_CASE("polytope Monte Carlo at n=3 matches the analytic 1/2") {
    const PolytopeEstimate est = polytope_volume_mc(3, 200000, 99);
    const double sigma = std::sqrt(0.25 / 200000.0);
    CHECK(std::abs(est.rate - 0.5) <= 4.0 * sigma);
    CHECK(est.estimate == doctest::Approx(std::pow(est.rate, 1.0 / 3.0)));
    CHECK(est.ci_low <= est.estimate);
    CHECK(est.estimate <= est.ci_high);

    // determinism and worker independence
    const PolytopeEstimate again = polytope_volume_mc(3, 200000, 99);
    CHECK(again.hits == est.hits);
    const PolytopeEstimate workers = polytope_volume_mc(3, 200000, 99, 2);
    CHECK(workers.hits == est.hits);

    // conditional mode: floor 0.5 accepts everything at n=3
    const PolytopeEstimate cond = polytope_volume_mc(3, 10000, 7, 1, 0.5);
    CHECK(cond.hits == cond.samples);

    CHECK_THROWS_AS(polytope_volume_mc(2, 20000, 1), InvalidArgumentError);
    CHECK_THROWS_AS(polytope_volume_mc(3, 100, 1), InvalidArgumentError);
}

TEST_CASE("ceiling superadditivity") {
    CHECK(ceil_superadditivity(0.5, 0.5, 1.0).holds);
    CHECK(ceil_superadditivity(1.0, 1.0, 2.0).holds);
    const CeilCheck vac = ceil_superadditivity(0.1, 0.1, 5.0);
    CHECK_FALSE(vac.premise);
    CHECK(vac.holds);

    SplitMix64 rng(321);
    int failures = 0;
    for (int i = 0; i < 1000000; ++i) {
        const double a = 10.0 * rng.next_double() - 5.0;
        const double b = 10.0 * rng.next_double() - 5.0;
        const double c = a + b - 3.0 * rng.next_double();  // premise holds
        if (!ceil_superadditivity(a, b, c).holds) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("continuous chain report") {
    const ContinuousChainReport rep = continuous_bound_chain(1e6, 0.1, 1);
    CHECK(rep.r % 2 == 0);
    CHECK(rep.r >= 2);
    CHECK(rep.final_bound == doctest::Approx(0.5 + std::pow(1e6, -(1.0 / 6.0 - 0.1))));
    CHECK(rep.steps.size() == 6);
    CHECK_THROWS_AS(continuous_bound_chain(1e6, 0.25, 1), DeltaOutOfRangeError);
    CHECK_THROWS_AS(continuous_bound_chain(1e6, 0.0, 1), DeltaOutOfRangeError);

    // r parity across a range of n and delta
    SplitMix64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const double n = 10.0 + rng.next_double() * 1e7;
        const double d = 0.01 + rng.next_double() * 0.23;
        CHECK(continuous_bound_chain(n, d, 1).r % 2 == 0);
    }
}

TEST_CASE("coloring serialization round-trips") {
    MetricColoring c{4, 3, {1, 2, 3, 1, 2, 3}};
    std::stringstream ss;
    c.write(ss);
    const MetricColoring back = MetricColoring::read(ss);
    CHECK(back.n == 4);
    CHECK(back.r == 3);
    CHECK(back.colors == c.colors);
}
