#include "containerlab/c4.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "c4_free_builder.hpp"
#include "containerlab/caps.hpp"
#include "containerlab/constants.hpp"
#include "containerlab/errors.hpp"
#include "containerlab/parallel.hpp"
#include "containerlab/rng.hpp"

namespace clab {

ConstantsReport gamma_and_cstar() {
    const EntropyRatioMax m = maximize_entropy_ratio();
    return {m.gamma, m.x, m.x};
}

// ---------------------------------------------------------------------------
// Labelled counting by edge-DFS with incremental feasibility pruning.

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return edges;
}

std::uint64_t count_c4_subtree(detail::C4FreeBuilder& b,
                               const std::vector<std::pair<int, int>>& edges, std::size_t i) {
    if (i == edges.size()) return 1;
    const auto [u, v] = edges[i];
    std::uint64_t total = count_c4_subtree(b, edges, i + 1);  // edge absent
    if (b.can_add(u, v)) {
        b.add(u, v);
        total += count_c4_subtree(b, edges, i + 1);
        b.remove(u, v);
    }
    return total;
}

}  // namespace

BigUint count_c4_free_graphs(int n, int workers) {
    if (n < 1 || n > global_caps().labelled_count_vertices)
        throw TooLargeError("labelled counting capped at n=" +
                            std::to_string(global_caps().labelled_count_vertices));
    const auto edges = all_pairs(n);
    const int split = std::min<int>(4, static_cast<int>(edges.size()));
    const int blocks = 1 << split;
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(blocks), 0);
    parallel_blocks(blocks, workers, [&](int block) {
        detail::C4FreeBuilder b(n);
        for (int j = 0; j < split; ++j) {
            if ((block >> j) & 1) {
                const auto [u, v] = edges[static_cast<std::size_t>(j)];
                if (!b.try_add(u, v)) return;  // prefix infeasible, contributes 0
            }
        }
        partial[static_cast<std::size_t>(block)] =
            count_c4_subtree(b, edges, static_cast<std::size_t>(split));
    });
    BigUint total;
    for (std::uint64_t part : partial) total += BigUint{part};
    return total;
}

double entropy_count_bound(int n, double delta) {
    if (n < 1) throw InvalidArgumentError("n must be positive");
    const double gamma = maximize_entropy_ratio().gamma;
    if (delta < 0.0 || delta >= gamma)
        throw InvalidArgumentError("delta must be in [0, gamma)");
    return (gamma - delta) * std::pow(static_cast<double>(n), 1.5);
}

// ---------------------------------------------------------------------------

ExtremalSubgraph max_c4_free_subgraph_heuristic(const Graph& g, std::uint64_t seed) {
    const auto edges = g.edges();
    SplitMix64 rng(seed);

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto shuffle = [&](std::vector<std::size_t>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[rng.next_below(i)]);
    };
    const auto greedy = [&](const std::vector<std::size_t>& ord) {
        detail::C4FreeBuilder b(g.n());
        std::vector<std::size_t> picked;
        for (std::size_t i : ord) {
            const auto [u, v] = edges[i];
            if (b.try_add(u, v)) picked.push_back(i);
        }
        return picked;
    };

    std::vector<std::size_t> best;
    for (int restart = 0; restart < 8; ++restart) {
        shuffle(order);
        std::vector<std::size_t> cur = greedy(order);
        // drop-one local search with sideways moves
        for (int round = 0; round < 60 && !cur.empty(); ++round) {
            std::vector<std::size_t> trial_order = cur;
            trial_order.erase(trial_order.begin() +
                              static_cast<std::ptrdiff_t>(rng.next_below(trial_order.size())));
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < edges.size(); ++i) rest.push_back(i);
            shuffle(rest);
            // rebuild from the survivors first, then try everything else
            std::vector<std::size_t> combined = trial_order;
            combined.insert(combined.end(), rest.begin(), rest.end());
            std::vector<std::size_t> next = greedy(combined);
            if (next.size() >= cur.size()) cur = std::move(next);
        }
        if (cur.size() > best.size()) best = cur;
    }

    ExtremalSubgraph out;
    out.size = static_cast<int>(best.size());
    for (std::size_t i : best) out.edges.push_back(edges[i]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

ExperimentSummary c4_random_experiment(int n, double p, int trials, std::uint64_t seed,
                                       ExperimentMode mode, int workers) {
    if (trials < 1) throw InvalidArgumentError("need at least one trial");
    const bool exact_feasible = n <= global_caps().exact_subgraph_vertices;
    bool run_exact = false;
    switch (mode) {
        case ExperimentMode::Auto: run_exact = exact_feasible; break;
        case ExperimentMode::Exact:
            if (!exact_feasible)
                throw TooLargeError("exact mode capped at n=" +
                                    std::to_string(global_caps().exact_subgraph_vertices));
            run_exact = true;
            break;
        case ExperimentMode::Heuristic: run_exact = false; break;
    }

    ExperimentSummary out;
    out.n = n;
    out.p = p;
    out.trials = trials;
    out.seed = seed;
    out.mode = run_exact ? "exact" : "heuristic";
    out.heuristic_sizes.assign(static_cast<std::size_t>(trials), 0);
    if (run_exact) out.exact_sizes.assign(static_cast<std::size_t>(trials), 0);

    parallel_blocks(trials, workers, [&](int trial) {
        const Graph g = random_graph(n, p, derive_seed(seed, 2ULL * static_cast<std::uint64_t>(trial)));
        const auto heur =
            max_c4_free_subgraph_heuristic(g, derive_seed(seed, 2ULL * static_cast<std::uint64_t>(trial) + 1));
        out.heuristic_sizes[static_cast<std::size_t>(trial)] = heur.size;
        if (run_exact)
            out.exact_sizes[static_cast<std::size_t>(trial)] = max_c4_free_subgraph_exact(g).size;
    });

    const auto& sizes = run_exact ? out.exact_sizes : out.heuristic_sizes;
    long long sum = 0;
    for (int s : sizes) {
        out.max_size = std::max(out.max_size, s);
        sum += s;
    }
    out.mean_size = static_cast<double>(sum) / static_cast<double>(trials);
    const double n32 = std::pow(static_cast<double>(n), 1.5);
    out.threshold_additive = (0.5 - 0.028) * n32;
    out.threshold_sqrtp = (2.0 / 3.0) * std::sqrt(p) * n32;
    return out;
}

// ---------------------------------------------------------------------------
// Certificates.

namespace {

void require_subgraph(const Graph& host, const Graph& h) {
    if (host.n() != h.n()) throw NotSubgraphError("host and subgraph vertex counts differ");
    for (const auto& [u, v] : h.edges()) {
        if (!host.has_edge(u, v)) throw NotSubgraphError("subgraph edge missing from host");
    }
}

int certificate_stop_size(int x_size, int n) {
    const int stop = stop_preset_b_sqrt(0.25, std::max(x_size, 1));
    return std::max(0, std::min(stop, n - 1));
}

}  // namespace

Certificate build_certificate(const Graph& host, const Graph& h, double delta, double epsilon,
                              double t, std::uint64_t seed) {
    require_subgraph(host, h);
    if (!is_c4_free(h)) throw NotC4FreeError("certificates are built for C4-free subgraphs");
    if (delta <= 0.0 || delta >= 0.5) throw InvalidArgumentError("delta must be in (0, 1/2)");
    const int n = h.n();
    const VertexOrdering ord = min_degree_ordering(h);

    Certificate cert;
    cert.delta = delta;
    cert.epsilon = epsilon;

    // split scan: first index in (delta n/2, delta n) whose right-degree
    // clears (1 - 2 epsilon) sqrt(n); the prefix before it becomes Y
    const double lo = delta * n / 2.0, hi = delta * n;
    int prefix = -1;
    for (int i = 1; i <= n; ++i) {
        if (static_cast<double>(i) <= lo) continue;
        if (static_cast<double>(i) >= hi) break;
        if (static_cast<double>(ord.right_degrees[static_cast<std::size_t>(i - 1)]) >=
            (1.0 - 2.0 * epsilon) * std::sqrt(static_cast<double>(n))) {
            prefix = i - 1;
            break;
        }
    }
    if (prefix < 0) {
        prefix = static_cast<int>(std::floor(hi));
        cert.fallback_split = true;
    }

    for (int j = 0; j < prefix; ++j) {
        const int v = ord.order[static_cast<std::size_t>(j)];
        cert.y.push_back(v);
        cert.y_mask.set(v);
    }
    cert.x_mask = h.vertex_mask() - cert.y_mask;

    cert.f = sparsify(h.restricted_to(cert.x_mask), t, seed);
    const Graph square = proper_square(cert.f.f);
    cert.stop_size = certificate_stop_size(cert.x_mask.count(), n);

    std::map<std::vector<int>, int> index_of;
    for (int v : cert.y) {
        const Bits128 nx = h.neighbors(v) & cert.x_mask;
        cert.deg_into_x.push_back(nx.count());
        cert.deg_within_y.push_back((h.neighbors(v) & cert.y_mask).count());
        const GreedyContainerResult built = greedy_container(square, nx, {}, cert.stop_size, cert.x_mask);
        auto [it, inserted] = index_of.try_emplace(built.fingerprint.vertices,
                                                   static_cast<int>(cert.fingerprints.size()));
        if (inserted) {
            cert.fingerprints.push_back(built.fingerprint);
            cert.containers.push_back(built.container);
        }
        cert.container_index.push_back(it->second);
    }
    return cert;
}

bool verify_certificate(const Graph& host, const Graph& h, const Certificate& cert) {
    try {
        require_subgraph(host, h);
        const int n = h.n();
        if ((cert.y_mask & cert.x_mask).any()) return false;
        if ((cert.y_mask | cert.x_mask) != h.vertex_mask()) return false;
        if (cert.y.size() != cert.deg_into_x.size() ||
            cert.y.size() != cert.deg_within_y.size() ||
            cert.y.size() != cert.container_index.size())
            return false;
        (void)n;

        // sparsifier edges must live inside H[X]
        for (const auto& [u, v] : cert.f.f.edges()) {
            if (!cert.x_mask.test(u) || !cert.x_mask.test(v) || !h.has_edge(u, v)) return false;
        }

        const Graph square = proper_square(cert.f.f);
        // containers must replay bit-exactly from their fingerprints
        for (std::size_t i = 0; i < cert.fingerprints.size(); ++i) {
            if (container_for_fingerprint(square, cert.fingerprints[i], {}, cert.stop_size,
                                          cert.x_mask) != cert.containers[i])
                return false;
        }

        for (std::size_t j = 0; j < cert.y.size(); ++j) {
            const int v = cert.y[j];
            if (!cert.y_mask.test(v)) return false;
            const Bits128 nx = h.neighbors(v) & cert.x_mask;
            if (nx.count() != cert.deg_into_x[j]) return false;
            if ((h.neighbors(v) & cert.y_mask).count() != cert.deg_within_y[j]) return false;

            bool independent = true;
            nx.for_each([&](int u) {
                if ((square.neighbors(u) & nx).any()) independent = false;
            });
            if (!independent) return false;

            const int r = cert.container_index[j];
            if (r < 0 || r >= static_cast<int>(cert.containers.size())) return false;
            if (!cert.containers[static_cast<std::size_t>(r)].contains(nx)) return false;
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

// ---------------------------------------------------------------------------

double chernoff_upper_tail(long long k, long long m, double p) {
    if (m < 0 || k < 0 || k > m) throw InvalidArgumentError("need 0 <= k <= m");
    if (p <= 0.0 || p >= 1.0) throw InvalidArgumentError("p must be in (0,1)");
    if (m == 0) return 1.0;
    const double x = static_cast<double>(k) / static_cast<double>(m);
    if (x <= p) return 1.0;
    double kl = x * std::log(x / p);
    if (x < 1.0) kl += (1.0 - x) * std::log((1.0 - x) / (1.0 - p));
    return std::exp(-static_cast<double>(m) * kl);
}

ExcessReport excess_degree_report(const Graph& h, const VertexOrdering& ordering, double p) {
    if (p <= 0.0 || p >= 1.0) throw InvalidArgumentError("p must be in (0,1)");
    const int n = h.n();
    if (static_cast<int>(ordering.order.size()) != n)
        throw InvalidArgumentError("ordering size does not match the graph");

    ExcessReport out;
    double mean_sum = 0.0;
    for (int pos = 0; pos < n; ++pos) {
        const double d = ordering.right_degrees[static_cast<std::size_t>(pos)];
        if (d <= 0.0) continue;  // zero right-degree can never join I
        const double suffix = static_cast<double>(n - pos - 1);
        const double container_mean = suffix * p / d;
        if (d > container_mean) {
            out.positions.push_back(pos);
            out.excess_sum += d - container_mean;
            mean_sum += container_mean;
        }
    }
    out.m_prime = static_cast<long long>(std::ceil(mean_sum));
    if (out.m_prime <= 0) {
        out.k = 0;
        out.tail_bound = 1.0;
        return out;
    }
    out.k = std::min<long long>(
        out.m_prime,
        static_cast<long long>(std::ceil(static_cast<double>(out.m_prime) * p + out.excess_sum)));
    out.tail_bound = chernoff_upper_tail(out.k, out.m_prime, p);
    return out;
}

// ---------------------------------------------------------------------------

BlowupGraph doubled_matching_blowup(const Graph& g0, std::uint64_t seed, bool full_matchings) {
    if (!is_c4_free(g0)) throw NotC4FreeError("blow-up requires a C4-free base");
    BlowupGraph out{g0, Graph(2 * g0.n()), seed, full_matchings};
    SplitMix64 rng(seed);
    for (const auto& [u, v] : g0.edges()) {
        const int a0 = 2 * u, a1 = 2 * u + 1, b0 = 2 * v, b1 = 2 * v + 1;
        int choice;
        if (full_matchings) {
            choice = 5 + static_cast<int>(rng.next_below(2));
        } else {
            choice = static_cast<int>(rng.next_below(7));
        }
        switch (choice) {
            case 0: break;
            case 1: out.result.add_edge(a0, b0); break;
            case 2: out.result.add_edge(a0, b1); break;
            case 3: out.result.add_edge(a1, b0); break;
            case 4: out.result.add_edge(a1, b1); break;
            case 5:
                out.result.add_edge(a0, b0);
                out.result.add_edge(a1, b1);
                break;
            default:
                out.result.add_edge(a0, b1);
                out.result.add_edge(a1, b0);
                break;
        }
    }
    if (!is_c4_free(out.result))
        throw std::logic_error("blow-up produced a C4; the construction guarantees it cannot");
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// expected-overlap advantage per unit n^{3/2}
double overlap_advantage(double p) {
    const double q = 1.0 - p;
    const double poly = 4.0 * p * q * q * q +
                        2.0 * (2.0 * p * p * q * q + 4.0 * p * p * p * q + p * p * p * p);
    return std::pow(2.0, -2.5) * poly - p / 2.0;
}

}  // namespace

OverlapCurve expected_overlap_curve(std::span<const double> p_grid) {
    OverlapCurve out;
    for (double p : p_grid) {
        if (p < 0.0 || p >= 1.0) throw InvalidArgumentError("grid values must be in [0,1)");
        out.p.push_back(p);
        out.g.push_back(overlap_advantage(p));
    }
    double lo = 1e-6, hi = 0.9;
    if (overlap_advantage(lo) <= 0.0 || overlap_advantage(hi) >= 0.0)
        throw std::logic_error("overlap advantage lost its sign-change bracket");
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        (overlap_advantage(mid) > 0.0 ? lo : hi) = mid;
    }
    out.p0 = 0.5 * (lo + hi);
    return out;
}

RegularThresholdReport regular_threshold(int n, double p) {
    if (n < 1 || p <= 0.0 || p > 1.0) throw InvalidArgumentError("need n >= 1 and p in (0,1]");
    RegularThresholdReport out;
    out.threshold = std::sqrt(p * static_cast<double>(n));
    const int dmax = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
    for (int d = 1; d <= dmax; ++d) {
        out.rows.push_back({d, static_cast<double>(d) * n,
                            p * static_cast<double>(n) * static_cast<double>(n) / d});
    }
    return out;
}

ManyEdgesAudit manyedges_audit(const Graph& h, double delta, double gamma, double c) {
    if (!is_c4_free(h)) throw NotC4FreeError("audit requires a C4-free graph");
    if (delta <= 0.0 || delta >= 0.5 || gamma <= 0.0 || gamma >= 0.5)
        throw InvalidArgumentError("delta and gamma must be in (0, 1/2)");
    const double n32 = std::pow(static_cast<double>(h.n()), 1.5);
    if (static_cast<double>(h.edge_count()) <= 0.5 * (1.0 - c) * n32)
        throw TooSparseError("edge count is below the (1-c)/2 n^{3/2} hypothesis");

    const VertexOrdering ord = min_degree_ordering(h);
    const int prefix = static_cast<int>(std::floor(delta * h.n()));
    const BipartitionSplit split = split_prefix(h, ord, prefix);

    ManyEdgesAudit out;
    out.e_xy = split.e_xy;
    out.e_x = split.e_x;
    out.e_y = split.e_y;
    out.threshold = (1.0 - gamma) * delta * n32;
    out.ok = static_cast<double>(out.e_xy) > out.threshold;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool has_clique(const std::vector<Bits128>& adj, Bits128 cand, int size) {
    if (size == 0) return true;
    if (cand.count() < size) return false;
    const int v = cand.first();
    Bits128 without = cand;
    without.reset(v);
    if (has_clique(adj, without & adj[static_cast<std::size_t>(v)], size - 1)) return true;
    return has_clique(adj, without, size);
}

std::uint64_t count_kkfree_subtree(std::vector<Bits128>& adj,
                                   const std::vector<std::pair<int, int>>& edges, std::size_t i,
                                   int k) {
    if (i == edges.size()) return 1;
    const auto [u, v] = edges[i];
    std::uint64_t total = count_kkfree_subtree(adj, edges, i + 1, k);
    // adding uv closes a K_k iff a (k-2)-clique sits in the common neighborhood
    const Bits128 common = adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)];
    if (!has_clique(adj, common, k - 2)) {
        adj[static_cast<std::size_t>(u)].set(v);
        adj[static_cast<std::size_t>(v)].set(u);
        total += count_kkfree_subtree(adj, edges, i + 1, k);
        adj[static_cast<std::size_t>(u)].reset(v);
        adj[static_cast<std::size_t>(v)].reset(u);
    }
    return total;
}

}  // namespace

KkFreeDemo kkfree_demo(int n, int k) {
    if (n < 1 || n > global_caps().labelled_count_vertices)
        throw TooLargeError("labelled counting capped at n=" +
                            std::to_string(global_caps().labelled_count_vertices));
    if (k < 3 || k > n) throw InvalidArgumentError("need 3 <= k <= n");

    KkFreeDemo out;
    const auto edges = all_pairs(n);
    std::vector<Bits128> adj(static_cast<std::size_t>(n));
    out.count = BigUint{count_kkfree_subtree(adj, edges, 0, k)};

    // Turan graph: balanced complete (k-1)-partite
    const int parts = k - 1;
    long long ex = static_cast<long long>(n) * (n - 1) / 2;
    for (int i = 0; i < parts; ++i) {
        const long long size = n / parts + (i < n % parts ? 1 : 0);
        ex -= size * (size - 1) / 2;
    }
    out.turan = ex;
    out.log2_ratio = out.count.log2() / static_cast<double>(out.turan);
    return out;
}

}  // namespace clab
