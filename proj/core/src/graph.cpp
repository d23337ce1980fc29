#include "containerlab/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "c4_free_builder.hpp"
#include "containerlab/errors.hpp"
#include "containerlab/rng.hpp"

namespace clab {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > global_caps().graph_vertices) {
        throw TooLargeError("vertex count must be in [1, " +
                            std::to_string(global_caps().graph_vertices) + "], got " +
                            std::to_string(n));
    }
    adj_.assign(static_cast<std::size_t>(n), Bits128{});
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw InvalidArgumentError("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)].reset(v);
    adj_[static_cast<std::size_t>(v)].reset(u);
    --m_;
}

Graph Graph::restricted_to(Bits128 keep) const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) {
        if (!keep.test(v)) continue;
        g.adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)] & keep;
    }
    long long deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += g.adj_[static_cast<std::size_t>(v)].count();
    g.m_ = deg_sum / 2;
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        neighbors(u).for_each([&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    }
    return out;
}

std::uint64_t Graph::hash() const {
    std::uint64_t h = mix64(0x636C6162ULL ^ static_cast<std::uint64_t>(n_));
    for (const auto& row : adj_) {
        h = mix64(h ^ row.w0);
        h = mix64(h ^ row.w1);
    }
    return h;
}

void Graph::write(std::ostream& out) const {
    out << "n=" << n_ << "\n";
    for (const auto& [u, v] : edges()) out << u << " " << v << "\n";
}

std::string Graph::to_string() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

Graph Graph::read(std::istream& in) {
    std::string header;
    if (!(in >> header) || header.rfind("n=", 0) != 0)
        throw InvalidArgumentError("graph stream must start with n=<int>");
    const int n = std::stoi(header.substr(2));
    Graph g(n);
    int u = 0, v = 0;
    while (in >> u >> v) g.add_edge(u, v);
    return g;
}

std::vector<int> identity_permutation(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

Graph proper_square(const Graph& g) {
    const int n = g.n();
    Graph sq(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.neighbors(u).intersects(g.neighbors(v))) sq.add_edge(u, v);
        }
    }
    return sq;
}

bool is_c4_free(const Graph& g) {
    const int n = g.n();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if ((g.neighbors(u) & g.neighbors(v)).count() >= 2) return false;
        }
    }
    return true;
}

long long cherry_count(const Graph& g) {
    long long total = 0;
    for (int v = 0; v < g.n(); ++v) {
        const long long d = g.degree(v);
        total += d * (d - 1) / 2;
    }
    return total;
}

DegreeSquareAudit degree_square_audit(const Graph& g) {
    if (!is_c4_free(g)) throw NotC4FreeError("degree_square_audit requires a C4-free graph");
    DegreeSquareAudit a;
    for (int v = 0; v < g.n(); ++v) {
        const long long d = g.degree(v);
        a.sum += d * d;
    }
    const double n = g.n();
    a.bound = n * n + 2.0 * std::pow(n, 1.5);
    a.ok = static_cast<double>(a.sum) <= a.bound;
    return a;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw InvalidArgumentError("edge probability must be in [0,1]");
    Graph g(n);
    SplitMix64 rng(seed);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) g.add_edge(u, v);
        }
    }
    return g;
}

namespace {

void check_permutation(std::span<const int> perm, int n) {
    if (static_cast<int>(perm.size()) != n)
        throw InvalidArgumentError("tiebreak permutation has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw InvalidArgumentError("tiebreak is not a permutation of [n]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace

VertexOrdering min_degree_ordering(const Graph& g, std::span<const int> tiebreak) {
    const int n = g.n();
    std::vector<int> identity;
    if (tiebreak.empty()) {
        identity = identity_permutation(n);
        tiebreak = identity;
    }
    check_permutation(tiebreak, n);
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) rank[static_cast<std::size_t>(tiebreak[static_cast<std::size_t>(pos)])] = pos;

    VertexOrdering out;
    out.order.reserve(static_cast<std::size_t>(n));
    out.right_degrees.reserve(static_cast<std::size_t>(n));
    Bits128 alive = g.vertex_mask();
    for (int step = 0; step < n; ++step) {
        int best = -1, best_deg = 0;
        alive.for_each([&](int v) {
            const int d = (g.neighbors(v) & alive).count();
            if (best < 0 || d < best_deg ||
                (d == best_deg && rank[static_cast<std::size_t>(v)] < rank[static_cast<std::size_t>(best)])) {
                best = v;
                best_deg = d;
            }
        });
        out.order.push_back(best);
        out.right_degrees.push_back(best_deg);
        alive.reset(best);
    }
    return out;
}

BipartitionSplit split_prefix(const Graph& g, const VertexOrdering& ord, int prefix_len) {
    if (prefix_len < 0 || prefix_len > g.n())
        throw InvalidArgumentError("prefix length out of range");
    BipartitionSplit s;
    for (int i = 0; i < prefix_len; ++i) s.y.set(ord.order[static_cast<std::size_t>(i)]);
    s.x = g.vertex_mask() - s.y;
    for (const auto& [u, v] : g.edges()) {
        const bool uy = s.y.test(u), vy = s.y.test(v);
        if (uy && vy) ++s.e_y;
        else if (!uy && !vy) ++s.e_x;
        else ++s.e_xy;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Exact maximum C4-free subgraph: branch and bound over the host's edges.

namespace {

struct C4FreeSearch {
    int n;
    std::vector<std::pair<int, int>> cand;  // host edges, high-conflict first
    detail::C4FreeBuilder builder;
    std::vector<int> deg;       // degrees of the current selection
    long long cherries = 0;     // sum of C(deg,2); capped by C(n,2) in any C4-free graph
    long long cherry_budget;    // C(n,2)
    std::vector<std::array<int, 4>> host_cycles;  // every C4 of the host, as cand indices
    std::vector<std::uint8_t> excluded;           // per cand edge
    std::vector<int> chosen;    // indices into cand
    std::vector<int> best;
    long long global_ub;

    explicit C4FreeSearch(const Graph& g)
        : n(g.n()), builder(g.n()), deg(static_cast<std::size_t>(g.n()), 0) {
        cand = g.edges();
        // deciding contested edges early tightens the remaining-count bound
        std::vector<long long> conflict(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const auto [u, v] = cand[i];
            conflict[i] = (g.neighbors(u) & g.neighbors(v)).count();
        }
        std::vector<std::size_t> idx(cand.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return conflict[a] > conflict[b]; });
        std::vector<std::pair<int, int>> sorted;
        sorted.reserve(cand.size());
        for (std::size_t i : idx) sorted.push_back(cand[i]);
        cand = std::move(sorted);
        const double nd = n;
        cherry_budget = static_cast<long long>(n) * (n - 1) / 2;
        global_ub = static_cast<long long>(std::floor(0.5 * std::pow(nd, 1.5) + nd));
        excluded.assign(cand.size(), 0);

        // host C4 inventory: one cycle x-a-y-b per common-neighbor pair {a,b}
        std::vector<std::vector<int>> edge_index(static_cast<std::size_t>(n),
                                                 std::vector<int>(static_cast<std::size_t>(n), -1));
        for (std::size_t i = 0; i < cand.size(); ++i) {
            edge_index[static_cast<std::size_t>(cand[i].first)][static_cast<std::size_t>(cand[i].second)] =
                static_cast<int>(i);
            edge_index[static_cast<std::size_t>(cand[i].second)][static_cast<std::size_t>(cand[i].first)] =
                static_cast<int>(i);
        }
        for (int x = 0; x < n; ++x) {
            for (int y = x + 1; y < n; ++y) {
                const Bits128 common = g.neighbors(x) & g.neighbors(y);
                std::vector<int> cns;
                common.for_each([&](int z) { cns.push_back(z); });
                for (std::size_t i = 0; i < cns.size(); ++i) {
                    for (std::size_t j = i + 1; j < cns.size(); ++j) {
                        host_cycles.push_back(
                            {edge_index[static_cast<std::size_t>(x)][static_cast<std::size_t>(cns[i])],
                             edge_index[static_cast<std::size_t>(cns[i])][static_cast<std::size_t>(y)],
                             edge_index[static_cast<std::size_t>(y)][static_cast<std::size_t>(cns[j])],
                             edge_index[static_cast<std::size_t>(cns[j])][static_cast<std::size_t>(x)]});
                    }
                }
            }
        }
    }

    void add(int u, int v) {
        cherries += deg[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(v)];
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
        builder.add(u, v);
    }
    void remove(int u, int v) {
        builder.remove(u, v);
        --deg[static_cast<std::size_t>(u)];
        --deg[static_cast<std::size_t>(v)];
        cherries -= deg[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(v)];
    }

    void greedy_seed() {
        // forward and reverse passes give a usable starting bound
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<int> picked;
            for (std::size_t j = 0; j < cand.size(); ++j) {
                const std::size_t i = dir == 0 ? cand.size() - 1 - j : j;
                const auto [u, v] = cand[i];
                if (builder.can_add(u, v)) {
                    add(u, v);
                    picked.push_back(static_cast<int>(i));
                }
            }
            if (picked.size() > best.size()) best = picked;
            for (int i : picked)
                remove(cand[static_cast<std::size_t>(i)].first, cand[static_cast<std::size_t>(i)].second);
        }
    }

    // Cherries of the final graph split exactly into cherries(S), the static
    // cross costs (deg_S(u)+deg_S(v) per added edge, only growing as edges
    // land), and the added edges' own cherries, which Jensen bounds below by
    // 2k^2/n_active - k. The whole sum must fit inside C(n,2).
    long long cherry_cap(const std::vector<int>& remaining) const {
        const long long budget = cherry_budget - cherries;
        std::vector<int> buckets(static_cast<std::size_t>(2 * n + 1), 0);
        Bits128 active;
        for (int e : remaining) {
            const auto [u, v] = cand[static_cast<std::size_t>(e)];
            ++buckets[static_cast<std::size_t>(deg[static_cast<std::size_t>(u)] +
                                               deg[static_cast<std::size_t>(v)])];
            active.set(u);
            active.set(v);
        }
        const double n_active = std::max(active.count(), 1);
        long long k = 0, spent = 0;
        for (std::size_t cost = 0; cost < buckets.size(); ++cost) {
            for (int c = 0; c < buckets[cost]; ++c) {
                spent += static_cast<long long>(cost);
                const double internal =
                    std::max(0.0, 2.0 * static_cast<double>(k + 1) * static_cast<double>(k + 1) /
                                          n_active -
                                      static_cast<double>(k + 1));
                if (static_cast<double>(spent) + internal > static_cast<double>(budget)) return k;
                ++k;
            }
        }
        return k;
    }

    // One pass over the host cycle inventory. An alive cycle (no excluded
    // edge) must lose one of its undecided edges; cycles disjoint on
    // undecided edges force distinct exclusions (the packing bound), and an
    // undecided edge on no alive cycle can never complete a C4, so it is
    // taken greedily without branching.
    struct CycleScan {
        long long packed = 0;
        std::vector<int> cycle_load;      // alive cycles per undecided edge
        std::vector<int> forced_excluded; // undecided edge completing a 3-chosen cycle
    };

    CycleScan scan_cycles(const std::vector<int>& remaining) const {
        CycleScan scan;
        scan.cycle_load.assign(cand.size(), 0);
        // 0 decided, 1 undecided, 2 spent by a packed cycle, 3 forced out
        std::vector<std::uint8_t> state(cand.size(), 0);
        for (int e : remaining) state[static_cast<std::size_t>(e)] = 1;

        std::vector<const std::array<int, 4>*> alive;
        alive.reserve(host_cycles.size());
        std::vector<int> undecided_of;
        undecided_of.reserve(host_cycles.size());
        for (const auto& cyc : host_cycles) {
            bool live = true;
            for (int e : cyc) {
                if (excluded[static_cast<std::size_t>(e)]) {
                    live = false;
                    break;
                }
            }
            if (!live) continue;
            int undecided = 0, last = -1;
            for (int e : cyc) {
                ++scan.cycle_load[static_cast<std::size_t>(e)];
                if (state[static_cast<std::size_t>(e)] != 0) {
                    ++undecided;
                    last = e;
                }
            }
            // three chosen edges force the fourth out right now
            if (undecided == 1) {
                if (state[static_cast<std::size_t>(last)] != 3) {
                    scan.forced_excluded.push_back(last);
                    state[static_cast<std::size_t>(last)] = 3;
                }
                continue;
            }
            if (undecided >= 2) {
                alive.push_back(&cyc);
                undecided_of.push_back(undecided);
            }
        }
        // pack tight cycles first; anything touching a spent or forced edge
        // may share that exclusion, so it cannot claim another
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < alive.size(); ++i) {
                if ((pass == 0) != (undecided_of[i] == 2)) continue;
                bool disjoint = true;
                for (int e : *alive[i]) {
                    if (state[static_cast<std::size_t>(e)] >= 2) {
                        disjoint = false;
                        break;
                    }
                }
                if (!disjoint) continue;
                ++scan.packed;
                for (int e : *alive[i]) {
                    if (state[static_cast<std::size_t>(e)] == 1) state[static_cast<std::size_t>(e)] = 2;
                }
            }
        }
        scan.packed += static_cast<long long>(scan.forced_excluded.size());
        return scan;
    }

    void dfs(const std::vector<int>& remaining) {
        if (remaining.empty()) {
            if (chosen.size() > best.size()) best = chosen;
            return;
        }
        if (static_cast<long long>(best.size()) >= global_ub) return;

        const CycleScan scan = scan_cycles(remaining);
        const long long slack =
            std::min({static_cast<long long>(remaining.size()), cherry_cap(remaining),
                      static_cast<long long>(remaining.size()) - scan.packed});
        if (static_cast<long long>(chosen.size()) + slack <= static_cast<long long>(best.size()))
            return;

        // reductions: forced exclusions (unit cycles) and greedy inclusion of
        // edges on no alive cycle; both are exchange-safe and cascade through
        // the recursion
        std::vector<std::uint8_t> is_forced_out(cand.size(), 0);
        for (int e : scan.forced_excluded) is_forced_out[static_cast<std::size_t>(e)] = 1;
        std::vector<int> contested;
        std::vector<int> forced_in;
        contested.reserve(remaining.size());
        for (int e : remaining) {
            if (is_forced_out[static_cast<std::size_t>(e)]) continue;
            if (scan.cycle_load[static_cast<std::size_t>(e)] == 0) forced_in.push_back(e);
            else contested.push_back(e);
        }
        if (!forced_in.empty() || !scan.forced_excluded.empty()) {
            for (int e : scan.forced_excluded) excluded[static_cast<std::size_t>(e)] = 1;
            for (int e : forced_in) {
                add(cand[static_cast<std::size_t>(e)].first, cand[static_cast<std::size_t>(e)].second);
                chosen.push_back(e);
            }
            dfs(contested);
            for (std::size_t i = 0; i < forced_in.size(); ++i) {
                chosen.pop_back();
                const int e = forced_in[forced_in.size() - 1 - i];
                remove(cand[static_cast<std::size_t>(e)].first, cand[static_cast<std::size_t>(e)].second);
            }
            for (int e : scan.forced_excluded) excluded[static_cast<std::size_t>(e)] = 0;
            return;
        }

        // branch on the most constrained edge
        std::size_t pick = 0;
        long long pick_load = -1;
        for (std::size_t i = 0; i < contested.size(); ++i) {
            const long long load = scan.cycle_load[static_cast<std::size_t>(contested[i])];
            if (load > pick_load) {
                pick_load = load;
                pick = i;
            }
        }
        const int e = contested[pick];
        const auto [u, v] = cand[static_cast<std::size_t>(e)];

        // include first: good solutions early make the count bound bite
        add(u, v);
        chosen.push_back(e);
        std::vector<int> still, dropped;
        still.reserve(contested.size());
        for (std::size_t i = 0; i < contested.size(); ++i) {
            if (i == pick) continue;
            const auto [a, b] = cand[static_cast<std::size_t>(contested[i])];
            if (builder.can_add(a, b)) {
                still.push_back(contested[i]);
            } else {
                dropped.push_back(contested[i]);
                excluded[static_cast<std::size_t>(contested[i])] = 1;
            }
        }
        dfs(still);
        for (int d : dropped) excluded[static_cast<std::size_t>(d)] = 0;
        chosen.pop_back();
        remove(u, v);

        std::vector<int> rest;
        rest.reserve(contested.size() - 1);
        for (std::size_t i = 0; i < contested.size(); ++i) {
            if (i != pick) rest.push_back(contested[i]);
        }
        excluded[static_cast<std::size_t>(e)] = 1;
        dfs(rest);
        excluded[static_cast<std::size_t>(e)] = 0;
    }
};

}  // namespace

ExtremalSubgraph max_c4_free_subgraph_exact(const Graph& g, int vertex_cap) {
    if (g.n() > vertex_cap)
        throw TooLargeError("exact C4-free subgraph oracle capped at n=" + std::to_string(vertex_cap));
    C4FreeSearch search(g);
    search.greedy_seed();
    std::vector<int> all(search.cand.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    search.dfs(all);

    ExtremalSubgraph out;
    out.size = static_cast<int>(search.best.size());
    for (int i : search.best) out.edges.push_back(search.cand[static_cast<std::size_t>(i)]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// ---------------------------------------------------------------------------
// Polarity graph of PG(2,q).

namespace {

// multiplication tables for the supported prime powers
struct FieldTables {
    int q;
    int mul[9][9];
    int add[9][9];
};

FieldTables make_field(int q) {
    FieldTables f{};
    f.q = q;
    const bool prime = (q == 2 || q == 3 || q == 5 || q == 7);
    if (prime) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                f.add[a][b] = (a + b) % q;
                f.mul[a][b] = (a * b) % q;
            }
        return f;
    }
    if (q == 4 || q == 8) {
        // GF(2^k) with x^2+x+1 resp. x^3+x+1; elements are bit-polynomials
        const int poly = (q == 4) ? 0b111 : 0b1011;
        const int k = (q == 4) ? 2 : 3;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                f.add[a][b] = a ^ b;
                int prod = 0, aa = a;
                for (int bit = 0; bit < k; ++bit) {
                    if ((b >> bit) & 1) prod ^= aa << bit;
                }
                for (int bit = 2 * k - 2; bit >= k; --bit) {
                    if ((prod >> bit) & 1) prod ^= poly << (bit - k);
                }
                f.mul[a][b] = prod;
            }
        return f;
    }
    if (q == 9) {
        // GF(9) = GF(3)[x]/(x^2+1); element a0 + 3*a1 stands for a0 + a1*x
        for (int a = 0; a < 9; ++a)
            for (int b = 0; b < 9; ++b) {
                const int a0 = a % 3, a1 = a / 3, b0 = b % 3, b1 = b / 3;
                f.add[a][b] = (a0 + b0) % 3 + 3 * ((a1 + b1) % 3);
                // (a0+a1 x)(b0+b1 x) = a0b0 - a1b1 + (a0b1+a1b0) x
                const int c0 = ((a0 * b0 - a1 * b1) % 3 + 3) % 3;
                const int c1 = (a0 * b1 + a1 * b0) % 3;
                f.mul[a][b] = c0 + 3 * c1;
            }
        return f;
    }
    throw UnsupportedFieldOrderError("polarity graph supports q in {2,3,4,5,7,8,9}");
}

}  // namespace

Graph polarity_graph(int q) {
    const FieldTables f = make_field(q);
    // canonical projective points: (1,y,z), (0,1,z), (0,0,1)
    std::vector<std::array<int, 3>> pts;
    pts.reserve(static_cast<std::size_t>(q * q + q + 1));
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});

    const int n = static_cast<int>(pts.size());
    Graph g(n);
    auto dot = [&](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        int s = 0;
        for (int i = 0; i < 3; ++i) s = f.add[s][f.mul[a[static_cast<std::size_t>(i)]][b[static_cast<std::size_t>(i)]]];
        return s;
    };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (dot(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)]) == 0) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace clab
