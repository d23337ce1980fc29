#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "containerlab/errors.hpp"
#include "containerlab/graph.hpp"
#include "containerlab/rng.hpp"
#include "test_oracles.hpp"

using namespace clab;

TEST_CASE("proper square on a two-edge path yields the single distance-2 edge") {
    const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const Graph sq = proper_square(path);
    CHECK(sq.edge_count() == 1);
    CHECK(sq.has_edge(0, 2));
}

TEST_CASE("proper square of the empty graph stays empty") {
    const Graph g(5);
    CHECK(proper_square(g).edge_count() == 0);
}

TEST_CASE("proper square of C5 is again a 5-cycle, per the exhaustive oracle") {
    const Graph c5 = Graph::cycle(5);
    const Graph sq = proper_square(c5);
    CHECK(sq == oracle::square_naive(c5));
    CHECK(sq.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(sq.degree(v) == 2);
    CHECK(sq.has_edge(0, 2));
}

TEST_CASE("proper square matches the definitional oracle on random graphs") {
    for (int i = 0; i < 200; ++i) {
        const Graph g = random_graph(2 + i % 11, 0.1 + 0.08 * (i % 10), derive_seed(77, i));
        CHECK(proper_square(g) == oracle::square_naive(g));
    }
}

TEST_CASE("min-degree ordering hand traces") {
    SUBCASE("star K_{1,3}") {
        const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        const VertexOrdering ord = min_degree_ordering(star);
        CHECK(ord.right_degrees == std::vector<int>{1, 1, 1, 0});
        long long sum = 0;
        for (int d : ord.right_degrees) sum += d;
        CHECK(sum == star.edge_count());
    }
    SUBCASE("triangle") {
        const VertexOrdering ord = min_degree_ordering(Graph::complete(3));
        CHECK(ord.right_degrees == std::vector<int>{2, 1, 0});
    }
    SUBCASE("C4 with identity tiebreak") {
        const Graph c4 = Graph::cycle(4);
        const VertexOrdering ord = min_degree_ordering(c4);
        CHECK(ord.order == std::vector<int>{0, 1, 2, 3});
        CHECK(ord.right_degrees == std::vector<int>{2, 1, 1, 0});
    }
}

TEST_CASE("min-degree ordering: right-degrees always sum to the edge count") {
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(2 + i % 15, 0.1 + 0.08 * (i % 10), derive_seed(5150, i));
        const VertexOrdering ord = min_degree_ordering(g);
        long long sum = 0;
        for (int d : ord.right_degrees) sum += d;
        CHECK(sum == g.edge_count());

        // the greedy rule: chosen vertex has minimum residual degree
        Bits128 alive = g.vertex_mask();
        for (std::size_t i2 = 0; i2 < ord.order.size(); ++i2) {
            int min_deg = g.n();
            alive.for_each([&](int v) { min_deg = std::min(min_deg, (g.neighbors(v) & alive).count()); });
            CHECK(ord.right_degrees[i2] == min_deg);
            alive.reset(ord.order[i2]);
        }
    }
}

TEST_CASE("tiebreak permutation drives the choice among equal degrees") {
    const Graph c4 = Graph::cycle(4);
    const std::vector<int> reversed{3, 2, 1, 0};
    const VertexOrdering ord = min_degree_ordering(c4, reversed);
    CHECK(ord.order[0] == 3);
    CHECK_THROWS_AS(min_degree_ordering(c4, std::vector<int>{0, 0, 1, 2}), InvalidArgumentError);
}

TEST_CASE("C4-freeness agrees with the subgraph-definition oracle") {
    CHECK_FALSE(is_c4_free(Graph::complete(4)));
    CHECK(is_c4_free(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})));

    // exhaustive on all graphs with up to 5 vertices
    for (int n = 2; n <= 5; ++n) {
        const int bits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1U << bits); ++mask) {
            Graph g(n);
            int b = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++b)
                    if ((mask >> b) & 1U) g.add_edge(u, v);
            CHECK(is_c4_free(g) == !oracle::has_c4_naive(g));
        }
    }
    // randomized above
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(6 + i % 3, 0.15 + 0.1 * (i % 7), derive_seed(909, i));
        CHECK(is_c4_free(g) == !oracle::has_c4_naive(g));
    }
}

TEST_CASE("cherry counts") {
    CHECK(cherry_count(Graph::complete(3)) == 3);
    const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(cherry_count(star) == 6);
    CHECK(cherry_count(Graph::cycle(4)) == 4);
}

TEST_CASE("degree-square audit values and precondition") {
    const DegreeSquareAudit a = degree_square_audit(Graph::cycle(5));
    CHECK(a.sum == 20);
    CHECK(a.bound == doctest::Approx(25.0 + 2.0 * std::pow(5.0, 1.5)));
    CHECK(a.ok);

    const DegreeSquareAudit b = degree_square_audit(Graph::from_edges(2, {{0, 1}}));
    CHECK(b.sum == 2);
    CHECK(b.bound == doctest::Approx(4.0 + 2.0 * std::pow(2.0, 1.5)));
    CHECK(b.ok);

    CHECK_THROWS_AS(degree_square_audit(Graph::complete(4)), NotC4FreeError);
}

TEST_CASE("G(n,p) sampler endpoints and determinism") {
    CHECK(random_graph(5, 0.0, 123).edge_count() == 0);
    CHECK(random_graph(5, 1.0, 123).edge_count() == 10);
    const Graph a = random_graph(20, 0.5, 42);
    const Graph b = random_graph(20, 0.5, 42);
    CHECK(a == b);
    CHECK(a.edge_count() > 50);  // 190 pairs at p=1/2; far from both ends
    CHECK(a.edge_count() < 140);
}

TEST_CASE("exact C4-free subgraph oracle on small hosts") {
    CHECK(max_c4_free_subgraph_exact(Graph::complete(4)).size == 4);
    CHECK(max_c4_free_subgraph_exact(Graph::cycle(4)).size == 3);
    CHECK(max_c4_free_subgraph_exact(Graph::complete(5)).size == 6);

    SUBCASE("result edges really form a C4-free subgraph of the host") {
        const Graph host = random_graph(12, 0.5, 99);
        const ExtremalSubgraph ex = max_c4_free_subgraph_exact(host);
        Graph h(host.n());
        for (const auto& [u, v] : ex.edges) {
            CHECK(host.has_edge(u, v));
            h.add_edge(u, v);
        }
        CHECK(is_c4_free(h));
        CHECK(h.edge_count() == ex.size);
    }

    SUBCASE("optimum matches full subset enumeration on tiny instances") {
        for (int i = 0; i < 12; ++i) {
            Graph g = random_graph(6, 0.6, derive_seed(31337, i));
            while (g.edge_count() > 13) {  // keep 2^m enumeration cheap
                const auto es = g.edges();
                g.remove_edge(es.front().first, es.front().second);
            }
            CHECK(max_c4_free_subgraph_exact(g).size == oracle::max_c4_free_subset_naive(g));
        }
    }

    SUBCASE("vertex cap is enforced") {
        CHECK_THROWS_AS(max_c4_free_subgraph_exact(Graph(30), 24), TooLargeError);
    }
}

TEST_CASE("exact oracle is invariant under vertex relabeling") {
    SplitMix64 rng(0xBADC0DEULL);
    for (int i = 0; i < 8; ++i) {
        const Graph g = random_graph(11 + i % 4, 0.35, derive_seed(515, i));
        const int opt = max_c4_free_subgraph_exact(g).size;
        // push the instance through a random relabeling; the optimum is a
        // graph invariant, so any order-dependence in the search would show
        std::vector<int> perm(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) perm[static_cast<std::size_t>(v)] = v;
        for (std::size_t j = perm.size(); j > 1; --j)
            std::swap(perm[j - 1], perm[rng.next_below(j)]);
        Graph relabeled(g.n());
        for (const auto& [u, v] : g.edges())
            relabeled.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        CHECK(max_c4_free_subgraph_exact(relabeled).size == opt);
    }
}

TEST_CASE("polarity graphs carry the full projective incidence signature") {
    // the common neighborhood of two points is the pole of their line, so
    // every pair has exactly one common neighbor unless that pole is one of
    // the endpoints; the latter happens exactly for (absolute point, point
    // on its own line) pairs, q(q+1) of them. A broken field table for the
    // prime-power orders could not reproduce this count.
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const Graph g = polarity_graph(q);
        long long exactly_one = 0;
        for (int u = 0; u < g.n(); ++u) {
            for (int v = u + 1; v < g.n(); ++v) {
                const int common = (g.neighbors(u) & g.neighbors(v)).count();
                CHECK(common <= 1);
                exactly_one += common;
            }
        }
        const long long pairs = static_cast<long long>(g.n()) * (g.n() - 1) / 2;
        CHECK(exactly_one == pairs - static_cast<long long>(q) * (q + 1));
    }
}

TEST_CASE("polarity graphs: counts, freeness, degree profile") {
    const int qs[] = {2, 3, 4, 5, 7, 8, 9};
    for (int q : qs) {
        const Graph g = polarity_graph(q);
        CHECK(g.n() == q * q + q + 1);
        CHECK(g.edge_count() == q * (q + 1) * (q + 1) / 2);
        CHECK(is_c4_free(g));
        // q+1 self-orthogonal points of degree q, the rest q+1
        int low = 0, high = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (g.degree(v) == q) ++low;
            else if (g.degree(v) == q + 1) ++high;
        }
        CHECK(low == q + 1);
        CHECK(low + high == g.n());
    }
    CHECK_THROWS_AS(polarity_graph(6), UnsupportedFieldOrderError);

    // q=2 is extremal inside K7: matches the exact oracle
    CHECK(polarity_graph(2).edge_count() == max_c4_free_subgraph_exact(Graph::complete(7)).size);
}

TEST_CASE("C4-free structural bounds hold on oracle and polarity outputs") {
    const auto check_bounds = [](const Graph& g) {
        const double n = g.n();
        CHECK(static_cast<double>(g.edge_count()) <= 0.5 * std::pow(n, 1.5) + n);
        CHECK(degree_square_audit(g).ok);
    };
    for (int q : {2, 3, 4, 5, 7, 8, 9}) check_bounds(polarity_graph(q));
    for (int i = 0; i < 6; ++i) {
        const Graph host = random_graph(10 + i, 0.4, derive_seed(7001, i));
        const ExtremalSubgraph ex = max_c4_free_subgraph_exact(host);
        Graph h(host.n());
        for (const auto& [u, v] : ex.edges) h.add_edge(u, v);
        check_bounds(h);
    }
}

TEST_CASE("bipartite C4-free bound e <= a sqrt(b) + 2b") {
    // random bipartite hosts, extremal C4-free subsets via the exact oracle
    for (int i = 0; i < 10; ++i) {
        const int a = 3 + i % 4, b = 4 + i % 5;
        Graph host(a + b);
        SplitMix64 rng(derive_seed(1234, i));
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b; ++v)
                if (rng.bernoulli(0.7)) host.add_edge(u, v);
        const ExtremalSubgraph ex = max_c4_free_subgraph_exact(host);
        const int lo = std::min(a, b), hi = std::max(a, b);
        CHECK(static_cast<double>(ex.size) <= lo * std::sqrt(static_cast<double>(hi)) + 2.0 * hi);
    }
}

TEST_CASE("split_prefix partitions the edge set") {
    const Graph g = random_graph(14, 0.4, 4242);
    const VertexOrdering ord = min_degree_ordering(g);
    const BipartitionSplit s = split_prefix(g, ord, 5);
    CHECK(s.y.count() == 5);
    CHECK(s.x.count() == 9);
    CHECK((s.x & s.y).none());
    CHECK(s.e_x + s.e_y + s.e_xy == g.edge_count());
}

TEST_CASE("graph serialization round-trips and is deterministic") {
    const Graph g = random_graph(9, 0.45, 2024);
    std::stringstream ss;
    g.write(ss);
    const std::string first = ss.str();
    CHECK(first.rfind("n=9\n", 0) == 0);
    std::istringstream in(first);
    const Graph back = Graph::read(in);
    CHECK(back == g);
    CHECK(back.to_string() == first);
}

TEST_CASE("graph input validation") {
    CHECK_THROWS_AS(Graph(0), TooLargeError);
    CHECK_THROWS_AS(Graph(129), TooLargeError);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), InvalidArgumentError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InvalidArgumentError);
    CHECK_THROWS_AS(random_graph(4, 1.5, 1), InvalidArgumentError);
}
