#include "containerlab/acceptance.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <span>
#include <sstream>

#include "containerlab/bigint.hpp"
#include "containerlab/c4.hpp"
#include "containerlab/constants.hpp"
#include "containerlab/container.hpp"
#include "containerlab/graph.hpp"
#include "containerlab/hypergraph.hpp"
#include "containerlab/metric.hpp"
#include "containerlab/rng.hpp"

namespace clab {

namespace {

struct CriterionRun {
    CriterionResult result;
    bool ok = true;

    CriterionRun(int id, std::string name) {
        result.id = id;
        result.name = std::move(name);
    }

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            result.details.push_back("FAILED: " + what);
        }
    }

    void note(const std::string& what) { result.details.push_back(what); }
};

template <class Fn>
CriterionResult timed(int id, const std::string& name, Fn&& body) {
    CriterionRun run(id, name);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(run);
    } catch (const std::exception& e) {
        run.ok = false;
        run.result.details.push_back(std::string("EXCEPTION: ") + e.what());
    }
    run.result.pass = run.ok;
    run.result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run.result;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// --- small oracles used only by the battery ---------------------------------

// every independent set of g (as masks), vertex count <= 20
std::vector<std::uint32_t> independent_sets(const Graph& g) {
    const int n = g.n();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1U << v;
        adj[static_cast<std::size_t>(v)] |= 1U << u;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        bool ind = true;
        for (std::uint32_t m = mask; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (adj[static_cast<std::size_t>(v)] & mask) {
                ind = false;
                break;
            }
        }
        if (ind) out.push_back(mask);
    }
    return out;
}

Bits128 to_bits(std::uint32_t mask) {
    Bits128 b;
    for (std::uint32_t m = mask; m; m &= m - 1) b.set(std::countr_zero(m));
    return b;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1ULL) g.add_edge(u, v);
    return g;
}

// exact upper tail of Bin(m, a/10) >= k, compared in log2 space
double exact_binomial_tail_log2(int k, int m, int tenths) {
    BigUint numer;
    for (int j = k; j <= m; ++j) {
        numer += BigUint::binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)) *
                 BigUint::pow(static_cast<std::uint64_t>(tenths), static_cast<unsigned>(j)) *
                 BigUint::pow(static_cast<std::uint64_t>(10 - tenths),
                              static_cast<unsigned>(m - j));
    }
    return numer.log2() - static_cast<double>(m) * std::log2(10.0);
}

// container soundness on one square graph: sandwich, replay, coverage
void check_container_soundness(CriterionRun& run, const Graph& square, int stop_size,
                               bool check_family) {
    const auto sets = independent_sets(square);
    ContainerFamily family;
    if (check_family) {
        family = enumerate_all_containers(square, {}, stop_size, square.n());
    }
    for (std::uint32_t mask : sets) {
        const Bits128 ind = to_bits(mask);
        const GreedyContainerResult built = greedy_container(square, ind, {}, stop_size);
        Bits128 t_bits;
        for (int v : built.fingerprint.vertices) t_bits.set(v);
        if (!ind.contains(t_bits)) {
            run.require(false, "fingerprint not inside its independent set");
            return;
        }
        if (!built.container.contains(ind)) {
            run.require(false, "independent set escapes its container");
            return;
        }
        const Bits128 replay = container_for_fingerprint(square, built.fingerprint, {}, stop_size);
        if (replay != built.container) {
            run.require(false, "fingerprint replay mismatch");
            return;
        }
        if (check_family) {
            const auto it = family.members.find(built.fingerprint.vertices);
            if (it == family.members.end() || it->second != built.container ||
                !it->second.contains(ind)) {
                run.require(false, "family does not cover an independent set");
                return;
            }
        }
    }
}

// --- criteria ----------------------------------------------------------------

CriterionResult criterion_constants(const AcceptanceOptions&) {
    return timed(1, "constants gamma, c*, and the subgraph-threshold constant", [](CriterionRun& run) {
        const ConstantsReport r = gamma_and_cstar();
        run.note("gamma = " + fmt(r.gamma) + ", c* = " + fmt(r.c_star));
        run.require(std::abs(r.gamma - 1.081919) <= 1e-5, "gamma within 1e-5 of 1.081919");
        run.require(std::abs(r.c_star - 0.49) <= 0.01, "c* within 0.01 of 0.49");
        const double c1 = (3.0 - 2.0 * std::sqrt(2.0)) / 6.0;
        run.note("(3-2sqrt2)/6 = " + fmt(c1));
        run.require(std::abs(c1 - 0.02860) <= 1e-5, "(3-2sqrt2)/6 within 1e-5 of 0.02860");
        const double recon = (2.0 / 3.0) * binary_entropy(r.c_star * r.c_star) / r.c_star;
        run.require(std::abs(recon - r.gamma) <= 1e-8, "gamma identity at c*");
    });
}

CriterionResult criterion_metric_oracle(const AcceptanceOptions& opt) {
    return timed(2, "metric counting oracle equality", [&](CriterionRun& run) {
        for (int n = 3; n <= 5; ++n) {
            for (int r = 1; r <= 4; ++r) {
                const BigUint brute = brute_force_count(n, r, opt.workers);
                const BigUint hyper = count_via_hypergraph(n, r, opt.workers);
                run.require(brute == hyper, "count mismatch at n=" + std::to_string(n) +
                                                " r=" + std::to_string(r));
            }
        }
        run.require(brute_force_count(3, 2).to_u64() == 8, "count(3,2) == 8");
        run.require(brute_force_count(3, 3).to_u64() == 24, "count(3,3) == 24");
        if (opt.full) {
            run.require(brute_force_count(6, 2, opt.workers) ==
                            count_via_hypergraph(6, 2, opt.workers),
                        "count mismatch at n=6 r=2");
            run.require(brute_force_count(6, 3, opt.workers) ==
                            count_via_hypergraph(6, 3, opt.workers),
                        "count mismatch at n=6 r=3");
        }
    });
}

CriterionResult criterion_lower_bound(const AcceptanceOptions& opt) {
    return timed(3, "metric count lower bound and interval witness", [&](CriterionRun& run) {
        std::vector<std::pair<int, int>> tested;
        for (int n = 3; n <= 5; ++n)
            for (int r = 1; r <= 4; ++r) tested.emplace_back(n, r);
        tested.emplace_back(6, 2);
        tested.emplace_back(6, 3);
        for (const auto& [n, r] : tested) {
            const BigUint count = brute_force_count(n, r, opt.workers);
            const BigUint lower =
                BigUint::pow(static_cast<std::uint64_t>(m_of_r(r)),
                             static_cast<unsigned>(n * (n - 1) / 2));
            run.require(count >= lower, "count(" + std::to_string(n) + "," + std::to_string(r) +
                                            ") >= m(r)^C(n,2)");
        }
        // the [ceil(r/2), r] interval construction stays metric
        SplitMix64 rng(derive_seed(opt.seed, 3));
        for (int n = 3; n <= 8; ++n) {
            for (int r = 1; r <= 8; ++r) {
                const int lo = (r + 1) / 2;
                MetricColoring c{n, r, std::vector<int>(static_cast<std::size_t>(n * (n - 1) / 2), lo)};
                run.require(is_metric(c), "all-min interval coloring metric");
                for (int trial = 0; trial < 25; ++trial) {
                    for (auto& col : c.colors)
                        col = lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(r - lo + 1)));
                    if (!is_metric(c)) {
                        run.require(false, "random interval coloring non-metric at n=" +
                                               std::to_string(n) + " r=" + std::to_string(r));
                        return;
                    }
                }
            }
        }
    });
}

CriterionResult criterion_local_criterion(const AcceptanceOptions& opt) {
    return timed(4, "size bound for violation-free color triples", [&](CriterionRun& run) {
        const int rmax = opt.full ? 6 : 4;
        for (int r = 1; r <= rmax; ++r) {
            const ColorSet all = (ColorSet{1} << r) - 1;
            long long violation_free = 0;
            for (ColorSet a = 1; a <= all; ++a) {
                for (ColorSet b = 1; b <= all; ++b) {
                    for (ColorSet c = 1; c <= all; ++c) {
                        const LocalCriterionResult res = local_criterion_check(a, b, c, r);
                        if (res.violation_free) {
                            ++violation_free;
                            if (!res.bound_ok) {
                                run.require(false, "bound violated at r=" + std::to_string(r));
                                return;
                            }
                        }
                    }
                }
            }
            run.note("r=" + std::to_string(r) + ": " + std::to_string(violation_free) +
                     " violation-free triples, zero bound violations");
        }
        run.note(opt.full ? "full scan r <= 6" : "fast tier scan r <= 4; full tier scans r <= 6");
    });
}

CriterionResult criterion_square_lower_bound(const AcceptanceOptions& opt) {
    return timed(5, "square edge lower bound on random graphs", [&](CriterionRun& run) {
        const double ps[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
        long long failures = 0;
        for (int i = 0; i < 10000; ++i) {
            const int n = 2 + static_cast<int>(derive_seed(opt.seed, 50000 + i) % 15);  // 2..16
            const double p = ps[i % 9];
            const Graph g = random_graph(n, p, derive_seed(opt.seed, 1000 + i));
            const Graph sq = proper_square(g);
            if (sq.edge_count() < g.edge_count() - n / 2) ++failures;
        }
        run.note("10000 seeded graphs, n <= 16, failures = " + std::to_string(failures));
        run.require(failures == 0, "e(G^2) >= e(G) - floor(n/2) everywhere");
    });
}

CriterionResult criterion_container_engine(const AcceptanceOptions& opt) {
    return timed(6, "container engine sandwich, replay, coverage", [&](CriterionRun& run) {
        // exhaustive over all labelled graphs on 4 and 5 vertices
        for (int n = 4; n <= 5; ++n) {
            const int bits = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
                check_container_soundness(run, graph_from_mask(n, mask), 1, true);
                if (!run.ok) return;
            }
        }
        if (opt.full) {
            for (std::uint64_t mask = 0; mask < (1ULL << 15); ++mask) {
                check_container_soundness(run, graph_from_mask(6, mask), 1, true);
                if (!run.ok) return;
            }
            run.note("exhaustive n=4,5 (and n=6, full tier)");
        } else {
            run.note("exhaustive n=4,5; the full tier adds n=6");
        }
        // 200 seeded instances up to n=12
        const double ps[] = {0.2, 0.4, 0.6};
        for (int i = 0; i < 200; ++i) {
            const int n = 6 + i % 7;  // 6..12
            const Graph g = random_graph(n, ps[i % 3], derive_seed(opt.seed, 7000 + i));
            check_container_soundness(run, g, 2, true);
            if (!run.ok) return;
        }
        // structured instances
        check_container_soundness(run, proper_square(Graph::cycle(5)), 1, true);
        Graph petersen(10);
        for (int i = 0; i < 5; ++i) {
            petersen.add_edge(i, (i + 1) % 5);
            petersen.add_edge(5 + i, 5 + (i + 2) % 5);
            petersen.add_edge(i, i + 5);
        }
        check_container_soundness(run, petersen, 3, true);
    });
}

CriterionResult criterion_polytope(const AcceptanceOptions& opt) {
    return timed(7, "metric polytope acceptance rate at n=3", [&](CriterionRun& run) {
        const PolytopeEstimate est = polytope_volume_mc(3, 1000000, derive_seed(opt.seed, 9), opt.workers);
        const double sigma = std::sqrt(0.25 / 1e6);
        run.note("rate = " + fmt(est.rate) + ", estimate = " + fmt(est.estimate));
        run.require(std::abs(est.rate - 0.5) <= 4.0 * sigma, "acceptance within 4 sigma of 1/2");
        run.require(std::abs(est.estimate - 0.7937) <= 0.003, "per-edge estimate near 0.5^{1/3}");
    });
}

CriterionResult criterion_hypergraph_stats(const AcceptanceOptions&) {
    return timed(8, "metric hypergraph co-degree bounds", [](CriterionRun& run) {
        for (int n = 3; n <= 8; ++n) {
            for (int r = 1; r <= 8; ++r) {
                auto [h, layout] = build_metric_hypergraph(n, r);
                (void)layout;
                const DegreeStats s = degree_stats(h);
                const std::string at = " at n=" + std::to_string(n) + " r=" + std::to_string(r);
                run.require(s.delta1 <= static_cast<long long>(n) * r * r, "Delta1 <= n r^2" + at);
                run.require(s.delta2 <= r, "Delta2 <= r" + at);
                run.require(s.delta3 <= 1, "Delta3 <= 1" + at);
                if (n >= 6 && r >= 3) {
                    run.require(s.dbar.value() >= static_cast<double>(r) * r * n / 64.0,
                                "dbar >= r^2 n/64" + at);
                }
            }
        }
    });
}

CriterionResult criterion_c4_counting(const AcceptanceOptions& opt) {
    return timed(9, "labelled C4-free counts and extremal numbers", [&](CriterionRun& run) {
        const double gamma = maximize_entropy_ratio().gamma;
        BigUint prev;
        for (int n = 1; n <= 7; ++n) {
            const BigUint fn = count_c4_free_graphs(n, opt.workers);
            if (n == 3) run.require(fn.to_u64() == 8, "F_3 == 8");
            if (n == 4) run.require(fn.to_u64() == 54, "F_4 == 54");
            run.require(fn.log2() < gamma * std::pow(n, 1.5), "log2 F_n < gamma n^{3/2} at n=" +
                                                                  std::to_string(n));
            if (n > 1) run.require(fn >= prev, "F_n monotone at n=" + std::to_string(n));
            if (n >= 3) run.note("F_" + std::to_string(n) + " = " + fn.to_string());
            prev = fn;
        }
        run.require(max_c4_free_subgraph_exact(Graph::complete(4)).size == 4, "ex(4,C4) == 4");
        run.require(max_c4_free_subgraph_exact(Graph::complete(5)).size == 6, "ex(5,C4) == 6");
        run.require(max_c4_free_subgraph_exact(Graph::complete(7)).size == 9, "ex(7,C4) == 9");
        const Graph pol2 = polarity_graph(2);
        run.require(pol2.n() == 7 && pol2.edge_count() == 9 && is_c4_free(pol2),
                    "polarity q=2 matches ex(7,C4)");
    });
}

CriterionResult criterion_blowup_overlap(const AcceptanceOptions& opt) {
    return timed(10, "blow-up safety and overlap root", [&](CriterionRun& run) {
        const Graph c5 = Graph::cycle(5);
        const Graph pol3 = polarity_graph(3);
        for (int i = 0; i < 100; ++i) {
            const bool full = i % 2 == 0;
            const BlowupGraph b1 = doubled_matching_blowup(c5, derive_seed(opt.seed, 300 + i), full);
            const BlowupGraph b2 = doubled_matching_blowup(pol3, derive_seed(opt.seed, 700 + i), full);
            run.require(is_c4_free(b1.result) && is_c4_free(b2.result),
                        "blow-up output C4-free, run " + std::to_string(i));
            if (!run.ok) return;
        }
        const double grid[] = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
        const OverlapCurve curve = expected_overlap_curve(grid);
        run.note("p0 = " + fmt(curve.p0));
        run.require(curve.p0 >= 0.15 && curve.p0 <= 0.25, "overlap root p0 in [0.15, 0.25]");
    });
}

CriterionResult criterion_certificates(const AcceptanceOptions& opt) {
    return timed(11, "certificate round-trip and tail-bound dominance", [&](CriterionRun& run) {
        const double ps[] = {0.3, 0.5, 0.7};
        int mutation_instances = 0;
        for (int i = 0; i < 200; ++i) {
            const int n = 12 + i % 9;  // 12..20
            const Graph host = random_graph(n, ps[i % 3], derive_seed(opt.seed, 11000 + i));
            const Graph sub = Graph::from_edges(
                n, std::span<const std::pair<int, int>>(
                       max_c4_free_subgraph_heuristic(host, derive_seed(opt.seed, 12000 + i)).edges));
            const Certificate cert =
                build_certificate(host, sub, 0.3, 0.25, 2.0, derive_seed(opt.seed, 13000 + i));
            if (!verify_certificate(host, sub, cert)) {
                run.require(false, "round-trip failed at instance " + std::to_string(i));
                return;
            }
            // exhaustive single-edge mutations touching Y, every instance
            if (!cert.y.empty()) {
                ++mutation_instances;
                for (int y : cert.y) {
                    for (int v = 0; v < n; ++v) {
                        if (v == y) continue;
                        Graph mutated = sub;
                        if (sub.has_edge(y, v)) {
                            mutated.remove_edge(y, v);
                        } else if (host.has_edge(y, v)) {
                            mutated.add_edge(y, v);
                        } else {
                            continue;
                        }
                        if (verify_certificate(host, mutated, cert)) {
                            run.require(false, "undetected mutation at instance " +
                                                   std::to_string(i));
                            return;
                        }
                    }
                }
            }
        }
        run.note("200 round-trips; mutation scans on " + std::to_string(mutation_instances) +
                 " instances");

        // relative-entropy bound dominates the exact binomial upper tail
        const int ms[] = {5, 10, 20, 50, 100};
        const int tenths[] = {1, 3, 5, 7, 9};
        int points = 0;
        for (int m : ms) {
            for (int t : tenths) {
                const double p = t / 10.0;
                const int kmin = static_cast<int>(std::ceil(m * p));
                for (int j = 0; j < 20; ++j) {
                    const int k = kmin + static_cast<int>((static_cast<long long>(j) * (m - kmin)) / 19);
                    const double bound_log2 =
                        std::log2(std::max(chernoff_upper_tail(k, m, p), 1e-300));
                    const double tail_log2 = exact_binomial_tail_log2(k, m, t);
                    ++points;
                    if (tail_log2 > bound_log2 + 1e-9) {
                        run.require(false, "exact tail exceeds the bound at k=" + std::to_string(k) +
                                               " m=" + std::to_string(m) + " p=" + fmt(p));
                        return;
                    }
                }
            }
        }
        run.note(std::to_string(points) + " grid points dominated");
    });
}

CriterionResult criterion_kkfree(const AcceptanceOptions&) {
    return timed(12, "K_k-free desk-scale direction check", [](CriterionRun& run) {
        const KkFreeDemo demo = kkfree_demo(5, 3);
        run.note("count = " + demo.count.to_string() + ", turan = " + std::to_string(demo.turan) +
                 ", log2 ratio = " + fmt(demo.log2_ratio));
        run.require(demo.turan == 6, "ex(5, K_3) == 6");
        run.require(demo.log2_ratio > 1.0 && demo.log2_ratio < 2.5, "log2 ratio in (1, 2.5)");
    });
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    std::vector<CriterionResult> results;
    results.push_back(criterion_constants(options));
    results.push_back(criterion_metric_oracle(options));
    results.push_back(criterion_lower_bound(options));
    results.push_back(criterion_local_criterion(options));
    results.push_back(criterion_square_lower_bound(options));
    results.push_back(criterion_container_engine(options));
    results.push_back(criterion_polytope(options));
    results.push_back(criterion_hypergraph_stats(options));
    results.push_back(criterion_c4_counting(options));
    results.push_back(criterion_blowup_overlap(options));
    results.push_back(criterion_certificates(options));
    results.push_back(criterion_kkfree(options));
    return results;
}

int print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out,
                     bool verbose) {
    int failures = 0;
    for (const auto& r : results) {
        char line[256];
        std::snprintf(line, sizeof line, "%s  %2d. %s  (%.2fs)", r.pass ? "PASS" : "FAIL", r.id,
                      r.name.c_str(), r.seconds);
        out << line << "\n";
        if (!r.pass) ++failures;
        if (verbose || !r.pass) {
            for (const auto& d : r.details) out << "      " << d << "\n";
        }
    }
    out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
        << "\n";
    return failures;
}

}  // namespace clab
