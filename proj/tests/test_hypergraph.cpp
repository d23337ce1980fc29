#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "containerlab/errors.hpp"
#include "containerlab/hypergraph.hpp"
#include "containerlab/metric.hpp"
#include "containerlab/rng.hpp"

using namespace clab;

namespace {

// O(N^3) co-degree recomputation straight from the definition
DegreeStats degree_stats_naive(const Hypergraph3& h) {
    DegreeStats s;
    const int n = h.vertex_count();
    const auto count_superedges = [&](std::vector<std::uint32_t> sigma) {
        long long c = 0;
        for (const auto& e : h.edges()) {
            bool contains = true;
            for (std::uint32_t v : sigma)
                contains = contains && (e[0] == v || e[1] == v || e[2] == v);
            if (contains) ++c;
        }
        return c;
    };
    for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(n); ++a) {
        s.delta1 = std::max(s.delta1, count_superedges({a}));
        for (std::uint32_t b = a + 1; b < static_cast<std::uint32_t>(n); ++b) {
            s.delta2 = std::max(s.delta2, count_superedges({a, b}));
            for (std::uint32_t c = b + 1; c < static_cast<std::uint32_t>(n); ++c)
                s.delta3 = std::max(s.delta3, count_superedges({a, b, c}));
        }
    }
    s.dbar = Rational(3 * static_cast<long long>(h.edge_count()), n);
    return s;
}

Hypergraph3 random_hypergraph(int n, int edges, std::uint64_t seed) {
    Hypergraph3 h(n);
    SplitMix64 rng(seed);
    for (int i = 0; i < edges; ++i) {
        std::uint32_t a = static_cast<std::uint32_t>(rng.next_below(static_cast<std::uint64_t>(n)));
        std::uint32_t b, c;
        do { b = static_cast<std::uint32_t>(rng.next_below(static_cast<std::uint64_t>(n))); } while (b == a);
        do { c = static_cast<std::uint32_t>(rng.next_below(static_cast<std::uint64_t>(n))); } while (c == a || c == b);
        h.add_edge(a, b, c);
    }
    return h;
}

}  // namespace

TEST_CASE("degree stats on tiny fixtures") {
    Hypergraph3 single(3);
    single.add_edge(0, 1, 2);
    const DegreeStats s = degree_stats(single);
    CHECK(s.delta1 == 1);
    CHECK(s.delta2 == 1);
    CHECK(s.delta3 == 1);
    CHECK(s.dbar.value() == doctest::Approx(1.0));

    const DegreeStats z = degree_stats(Hypergraph3(5));
    CHECK(z.delta1 == 0);
    CHECK(z.delta2 == 0);
    CHECK(z.delta3 == 0);
    CHECK(z.dbar.value() == doctest::Approx(0.0));

    CHECK_THROWS_AS(degree_stats(Hypergraph3(0)), EmptyVertexSetError);
}

TEST_CASE("metric hypergraph at n=3, r=3 has the three non-metric arrangements") {
    auto [h, layout] = build_metric_hypergraph(3, 3);
    CHECK(h.vertex_count() == 9);
    CHECK(h.edge_count() == 3);
    const DegreeStats s = degree_stats(h);
    CHECK(s.delta2 == 1);
    CHECK(s.delta3 == 1);
    CHECK(s.dbar.value() == doctest::Approx(1.0));
    // every edge uses colors {1,1,3} in some arrangement
    for (const auto& e : h.edges()) {
        std::vector<int> colors{layout.color_of(e[0]), layout.color_of(e[1]), layout.color_of(e[2])};
        std::sort(colors.begin(), colors.end());
        CHECK(colors == std::vector<int>{1, 1, 3});
    }
}

TEST_CASE("degree stats match the naive recomputation, random and metric instances") {
    for (int i = 0; i < 30; ++i) {
        const Hypergraph3 h = random_hypergraph(6 + i % 20, 3 + i, derive_seed(2222, i));
        const DegreeStats fast = degree_stats(h);
        const DegreeStats slow = degree_stats_naive(h);
        CHECK(fast.delta1 == slow.delta1);
        CHECK(fast.delta2 == slow.delta2);
        CHECK(fast.delta3 == slow.delta3);
        CHECK(fast.delta3 >= 0);
        CHECK(fast.delta3 <= 1);
        CHECK(fast.delta2 >= fast.delta3);
        CHECK(fast.delta1 >= fast.delta2);
    }
    for (int n = 3; n <= 4; ++n) {
        for (int r = 2; r <= 3; ++r) {
            auto [h, layout] = build_metric_hypergraph(n, r);
            (void)layout;
            const DegreeStats fast = degree_stats(h);
            const DegreeStats slow = degree_stats_naive(h);
            CHECK(fast.delta1 == slow.delta1);
            CHECK(fast.delta2 == slow.delta2);
            CHECK(fast.delta3 == slow.delta3);
        }
    }
}

TEST_CASE("delta_hp closed forms on the single-edge hypergraph") {
    Hypergraph3 h(3);
    h.add_edge(0, 1, 2);
    CHECK(delta_hp(h, 1.0) == doctest::Approx(6.0));
    CHECK(delta_hp(h, 0.5) == doctest::Approx(16.0));

    auto [mh, layout] = build_metric_hypergraph(3, 3);
    (void)layout;
    CHECK(delta_hp(mh, 1.0) == doctest::Approx(6.0));

    CHECK_THROWS_AS(delta_hp(Hypergraph3(4), 0.5), ZeroAverageDegreeError);
    CHECK_THROWS_AS(delta_hp(h, 0.0), InvalidArgumentError);
}

TEST_CASE("delta_hp decreases strictly in p when co-degrees are positive") {
    for (int i = 0; i < 20; ++i) {
        const Hypergraph3 h = random_hypergraph(8 + i, 6 + i, derive_seed(3333, i));
        if (degree_stats(h).delta2 == 0) continue;
        double prev = delta_hp(h, 0.05);
        for (double p = 0.1; p <= 1.0; p += 0.05) {
            const double cur = delta_hp(h, p);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("hypotheses_check evaluates both displayed conditions") {
    Hypergraph3 h(3);
    h.add_edge(0, 1, 2);
    const ContainerHypotheses bad = hypotheses_check(h, 1.0, 0.5, 1);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.p_ok);  // 1 > 1/729

    const ContainerHypotheses boundary = hypotheses_check(h, 1.0 / 729.0, 0.5, 1);
    CHECK(boundary.p_ok);  // boundary passes

    // metric instance at the container-hypothesis parameters: find the first n
    // both conditions hold by scanning the closed-form chain
    const DiscreteChainParameters params = discrete_chain_parameters(8, 3, 0.1, 1);
    CHECK(params.exact_stats);
    CHECK(params.chain.size() >= 5);

    CHECK_THROWS_AS(hypotheses_check(h, 0.5, 1.5, 1), InvalidArgumentError);
    CHECK_THROWS_AS(hypotheses_check(h, 0.5, 0.5, 0), InvalidArgumentError);
}

TEST_CASE("independence and edge counting agree with each other") {
    auto [h, layout] = build_metric_hypergraph(3, 3);
    CHECK(is_independent(h, std::vector<std::uint32_t>{}));
    const auto& e0 = h.edges().front();
    CHECK_FALSE(is_independent(h, std::vector<std::uint32_t>{e0[0], e0[1], e0[2]}));

    // the (1,1,3) one-per-column coloring is dependent
    const std::vector<std::uint32_t> bad{layout.vertex_id(1, 0), layout.vertex_id(1, 1),
                                         layout.vertex_id(3, 2)};
    CHECK_FALSE(is_independent(h, bad));

    // all vertices with colors {1,3}: all three arrangements of {1,1,3} survive
    std::vector<std::uint32_t> s;
    for (int col = 0; col < layout.columns(); ++col) {
        s.push_back(layout.vertex_id(1, col));
        s.push_back(layout.vertex_id(3, col));
    }
    CHECK(edges_within(h, s) == 3);

    std::vector<std::uint32_t> all;
    for (int v = 0; v < h.vertex_count(); ++v) all.push_back(static_cast<std::uint32_t>(v));
    CHECK(edges_within(h, all) == static_cast<long long>(h.edge_count()));
    CHECK(edges_within(h, std::vector<std::uint32_t>{}) == 0);

    // edges_within == 0 iff independent, sampled subsets
    SplitMix64 rng(99);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::uint32_t> subset;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (rng.bernoulli(0.5)) subset.push_back(static_cast<std::uint32_t>(v));
        CHECK((edges_within(h, subset) == 0) == is_independent(h, subset));
    }
}

TEST_CASE("hypergraph serialization is canonical and round-trips") {
    Hypergraph3 h(6);
    h.add_edge(5, 1, 3);
    h.add_edge(0, 2, 4);
    h.add_edge(5, 1, 3);  // duplicate collapses
    std::stringstream ss;
    h.write(ss);
    CHECK(ss.str() == "N=6\n0 2 4\n1 3 5\n");
    std::istringstream in(ss.str());
    const Hypergraph3 back = Hypergraph3::read(in);
    CHECK(back.edge_count() == 2);
    CHECK(back.has_edge(1, 3, 5));

    CHECK_THROWS_AS(h.add_edge(1, 1, 2), InvalidArgumentError);
    CHECK_THROWS_AS(h.add_edge(0, 1, 9), InvalidArgumentError);
}
