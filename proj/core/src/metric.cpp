#include "containerlab/metric.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>

#include "containerlab/caps.hpp"
#include "containerlab/errors.hpp"
#include "containerlab/parallel.hpp"
#include "containerlab/rng.hpp"

namespace clab {

int m_of_r(int r) {
    if (r < 1) throw InvalidArgumentError("r must be positive");
    return (r + 2) / 2;  // ceil((r+1)/2)
}

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }
long long choose3(long long n) { return n * (n - 1) * (n - 2) / 6; }

bool violates_triangle(int a, int b, int c) {
    const int mx = std::max({a, b, c});
    return 2 * mx > a + b + c;  // strict violation of some inequality
}

// r^m against the enumeration budget without overflow
void check_color_budget(int n, int r) {
    const long long m = choose2(n);
    const std::uint64_t budget = global_caps().enumeration_budget;
    std::uint64_t total = 1;
    for (long long i = 0; i < m; ++i) {
        if (total > budget / static_cast<std::uint64_t>(r))
            throw TooLargeError("r^C(n,2) exceeds the enumeration budget");
        total *= static_cast<std::uint64_t>(r);
    }
    if (total > budget) throw TooLargeError("r^C(n,2) exceeds the enumeration budget");
}

}  // namespace

void MetricColoring::write(std::ostream& out) const {
    out << n << " " << r << "\n";
    for (std::size_t i = 0; i < colors.size(); ++i) out << (i ? " " : "") << colors[i];
    out << "\n";
}

MetricColoring MetricColoring::read(std::istream& in) {
    MetricColoring c;
    if (!(in >> c.n >> c.r)) throw InvalidArgumentError("coloring stream needs an 'n r' header");
    c.colors.resize(static_cast<std::size_t>(choose2(c.n)));
    for (auto& col : c.colors) {
        if (!(in >> col)) throw InvalidArgumentError("coloring stream ended early");
    }
    return c;
}

ColumnLayout::ColumnLayout(int n, int r) : n_(n), r_(r), cols_(static_cast<int>(choose2(n))) {
    if (n < 3 || r < 1) throw InvalidArgumentError("layout needs n >= 3 and r >= 1");
}

int ColumnLayout::column(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v) throw InvalidArgumentError("bad pair");
    return static_cast<int>(static_cast<long long>(u) * n_ - choose2(u + 1) + (v - u - 1));
}

std::pair<int, int> ColumnLayout::pair_of_column(int col) const {
    if (col < 0 || col >= cols_) throw InvalidArgumentError("column out of range");
    int u = 0;
    int remaining = col;
    while (remaining >= n_ - 1 - u) {
        remaining -= n_ - 1 - u;
        ++u;
    }
    return {u, u + 1 + remaining};
}

std::uint32_t ColumnLayout::vertex_id(int color, int col) const {
    if (color < 1 || color > r_ || col < 0 || col >= cols_)
        throw InvalidArgumentError("bad (color, column)");
    return static_cast<std::uint32_t>((color - 1) * cols_ + col);
}

std::pair<Hypergraph3, ColumnLayout> build_metric_hypergraph(int n, int r) {
    ColumnLayout layout(n, r);
    if (layout.vertex_count() > global_caps().hypergraph_vertices)
        throw TooLargeError("r*C(n,2) exceeds the hypergraph cap");
    Hypergraph3 h(layout.vertex_count());
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            for (int w = v + 1; w < n; ++w) {
                const int c1 = layout.column(u, v);
                const int c2 = layout.column(u, w);
                const int c3 = layout.column(v, w);
                for (int a = 1; a <= r; ++a) {
                    for (int b = 1; b <= r; ++b) {
                        for (int c = 1; c <= r; ++c) {
                            if (violates_triangle(a, b, c)) {
                                h.add_edge(layout.vertex_id(a, c1), layout.vertex_id(b, c2),
                                           layout.vertex_id(c, c3));
                            }
                        }
                    }
                }
            }
        }
    }
    return {std::move(h), layout};
}

bool is_metric(const MetricColoring& c) {
    ColumnLayout layout(c.n, c.r);
    if (static_cast<int>(c.colors.size()) != layout.columns())
        throw InvalidArgumentError("coloring has the wrong number of entries");
    for (int col : c.colors) {
        if (col < 1 || col > c.r) throw InvalidArgumentError("color out of range");
    }
    for (int u = 0; u < c.n; ++u) {
        for (int v = u + 1; v < c.n; ++v) {
            for (int w = v + 1; w < c.n; ++w) {
                const int a = c.colors[static_cast<std::size_t>(layout.column(u, v))];
                const int b = c.colors[static_cast<std::size_t>(layout.column(u, w))];
                const int cc = c.colors[static_cast<std::size_t>(layout.column(v, w))];
                if (violates_triangle(a, b, cc)) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Counting routes. The brute-force route never looks at the hypergraph and
// the hypergraph route never evaluates a triangle inequality; their equality
// is the cross-check.

namespace {

// for column k, the (col1, col2) pairs of triangles closed by k
std::vector<std::vector<std::pair<int, int>>> closing_triangles(const ColumnLayout& layout) {
    std::vector<std::vector<std::pair<int, int>>> closures(
        static_cast<std::size_t>(layout.columns()));
    const int n = layout.n();
    for (int v = 0; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
            const int k = layout.column(v, w);
            for (int u = 0; u < v; ++u) {
                closures[static_cast<std::size_t>(k)].emplace_back(layout.column(u, v),
                                                                   layout.column(u, w));
            }
        }
    }
    return closures;
}

struct BruteCounter {
    int r;
    const std::vector<std::vector<std::pair<int, int>>>& closures;
    std::vector<int> colors;
    BigUint count;

    void dfs(std::size_t col) {
        if (col == colors.size()) {
            count += BigUint{1};
            return;
        }
        for (int c = 1; c <= r; ++c) {
            colors[col] = c;
            bool ok = true;
            for (const auto& [c1, c2] : closures[col]) {
                if (violates_triangle(colors[static_cast<std::size_t>(c1)],
                                      colors[static_cast<std::size_t>(c2)], c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(col + 1);
        }
        colors[col] = 0;
    }
};

}  // namespace

BigUint brute_force_count(int n, int r, int workers) {
    ColumnLayout layout(n, r);
    check_color_budget(n, r);
    const auto closures = closing_triangles(layout);
    const std::size_t cols = static_cast<std::size_t>(layout.columns());

    std::vector<BigUint> partial(static_cast<std::size_t>(r));
    parallel_blocks(r, workers, [&](int block) {
        BruteCounter counter{r, closures, std::vector<int>(cols, 0), BigUint{}};
        counter.colors[0] = block + 1;  // first column's triangles close later, no check needed
        counter.dfs(1);
        partial[static_cast<std::size_t>(block)] = counter.count;
    });
    BigUint total;
    for (const auto& part : partial) total += part;
    return total;
}

namespace {

struct EdgeAtColumn {
    int col1;
    int color1;
    int col2;
    int color2;
    int color3;  // the color at the closing column
};

struct HypergraphCounter {
    int r;
    const std::vector<std::vector<EdgeAtColumn>>& by_closing;
    std::vector<int> chosen;  // color per column, 0 = unset
    BigUint count;

    void dfs(std::size_t col) {
        if (col == chosen.size()) {
            count += BigUint{1};
            return;
        }
        for (int c = 1; c <= r; ++c) {
            bool ok = true;
            for (const auto& e : by_closing[col]) {
                if (e.color3 == c && chosen[static_cast<std::size_t>(e.col1)] == e.color1 &&
                    chosen[static_cast<std::size_t>(e.col2)] == e.color2) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[col] = c;
            dfs(col + 1);
            chosen[col] = 0;
        }
    }
};

}  // namespace

BigUint count_via_hypergraph(int n, int r, int workers) {
    check_color_budget(n, r);
    auto [h, layout] = build_metric_hypergraph(n, r);
    const std::size_t cols = static_cast<std::size_t>(layout.columns());

    std::vector<std::vector<EdgeAtColumn>> by_closing(cols);
    for (const auto& e : h.edges()) {
        struct Part {
            int col;
            int color;
        };
        Part parts[3];
        for (int i = 0; i < 3; ++i) {
            parts[i] = {layout.column_of(e[static_cast<std::size_t>(i)]),
                        layout.color_of(e[static_cast<std::size_t>(i)])};
        }
        std::sort(parts, parts + 3, [](const Part& a, const Part& b) { return a.col < b.col; });
        by_closing[static_cast<std::size_t>(parts[2].col)].push_back(
            {parts[0].col, parts[0].color, parts[1].col, parts[1].color, parts[2].color});
    }

    std::vector<BigUint> partial(static_cast<std::size_t>(r));
    parallel_blocks(r, workers, [&](int block) {
        HypergraphCounter counter{r, by_closing, std::vector<int>(cols, 0), BigUint{}};
        counter.chosen[0] = block + 1;
        counter.dfs(1);
        partial[static_cast<std::size_t>(block)] = counter.count;
    });
    BigUint total;
    for (const auto& part : partial) total += part;
    return total;
}

// ---------------------------------------------------------------------------

LocalCriterionResult local_criterion_check(ColorSet a, ColorSet b, ColorSet c, int r) {
    if (r < 1 || r > 62) throw InvalidArgumentError("r must be in [1,62]");
    const ColorSet all = (ColorSet{1} << r) - 1;
    if (a == 0 || b == 0 || c == 0) throw EmptySetError("sets A, B, C must be nonempty");
    if ((a | b | c) & ~all) throw InvalidArgumentError("set contains a color above r");

    LocalCriterionResult out;
    out.violation_free = true;
    for (int ai = 1; ai <= r && out.violation_free; ++ai) {
        if (!((a >> (ai - 1)) & 1)) continue;
        for (int bi = 1; bi <= r && out.violation_free; ++bi) {
            if (!((b >> (bi - 1)) & 1)) continue;
            for (int ci = 1; ci <= r; ++ci) {
                if (!((c >> (ci - 1)) & 1)) continue;
                if (violates_triangle(ai, bi, ci)) {
                    out.violation_free = false;
                    break;
                }
            }
        }
    }
    out.size_sum = std::popcount(a) + std::popcount(b) + std::popcount(c);
    out.bound = 3 * m_of_r(r) + (r % 2 == 1 ? 1 : 0);
    out.bound_ok = !out.violation_free || out.size_sum <= out.bound;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct MaskInfo {
    int min_color;
    int max_color;
    int size;
};

bool sets_compatible(const MaskInfo& a, const MaskInfo& b, const MaskInfo& c) {
    return c.max_color <= a.min_color + b.min_color && b.max_color <= a.min_color + c.min_color &&
           a.max_color <= b.min_color + c.min_color;
}

struct MaxIndepSearch {
    int r;
    std::vector<MaskInfo> info;                    // per mask
    std::vector<ColorSet> masks_by_size;           // nonempty masks, big first
    std::vector<std::vector<std::array<int, 2>>> triangles_at;  // per column: earlier column pairs
    std::vector<ColorSet> chosen;
    long long best = 0;

    void dfs(std::size_t col, long long current) {
        if (col == chosen.size()) {
            best = std::max(best, current);
            return;
        }
        if (current + static_cast<long long>(chosen.size() - col) * r <= best) return;
        for (ColorSet mask : masks_by_size) {
            const MaskInfo& mi = info[static_cast<std::size_t>(mask)];
            bool ok = true;
            for (const auto& [c1, c2] : triangles_at[col]) {
                if (!sets_compatible(info[static_cast<std::size_t>(chosen[static_cast<std::size_t>(c1)])],
                                     info[static_cast<std::size_t>(chosen[static_cast<std::size_t>(c2)])], mi)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen[col] = mask;
            dfs(col + 1, current + mi.size);
            chosen[col] = 0;
        }
    }
};

}  // namespace

MaxIndependentAudit max_independent_audit(int n, int r) {
    ColumnLayout layout(n, r);
    MaxIndependentAudit out;
    // r=1 has one color per column, so the even-case form is already exact
    const bool odd_slack = r % 2 == 1 && r >= 3;
    out.bound = static_cast<long long>(m_of_r(r)) * choose2(n) +
                (odd_slack ? static_cast<long long>(r) * n : 0);
    out.conjectured_bound =
        odd_slack ? static_cast<long long>(m_of_r(r)) * choose2(n) + n / 2 : out.bound;

    const long long cells = static_cast<long long>(r) * layout.columns();
    const int cols = layout.columns();

    std::vector<std::vector<std::array<int, 2>>> triangles_at(static_cast<std::size_t>(cols));
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            for (int u = 0; u < v; ++u)
                triangles_at[static_cast<std::size_t>(layout.column(v, w))].push_back(
                    {layout.column(u, v), layout.column(u, w)});

    std::vector<MaskInfo> info(static_cast<std::size_t>(1) << r);
    for (ColorSet mask = 1; mask < (ColorSet{1} << r); ++mask) {
        info[static_cast<std::size_t>(mask)] = {std::countr_zero(mask) + 1,
                                                64 - std::countl_zero(mask), std::popcount(mask)};
    }

    if (cells <= global_caps().max_indep_exact_cells) {
        MaxIndepSearch search;
        search.r = r;
        search.info = info;
        for (ColorSet mask = 1; mask < (ColorSet{1} << r); ++mask) search.masks_by_size.push_back(mask);
        std::stable_sort(search.masks_by_size.begin(), search.masks_by_size.end(),
                         [&](ColorSet a, ColorSet b) {
                             return info[static_cast<std::size_t>(a)].size > info[static_cast<std::size_t>(b)].size;
                         });
        search.triangles_at = triangles_at;
        search.chosen.assign(static_cast<std::size_t>(cols), 0);
        search.dfs(0, 0);
        out.max_size = search.best;
        out.exact = true;
    } else {
        // seeded hill-climb from the interval construction; a lower bound only
        const ColorSet interval = ((ColorSet{1} << r) - 1) ^ ((ColorSet{1} << ((r + 1) / 2 - 1)) - 1);
        std::vector<ColorSet> cur(static_cast<std::size_t>(cols), interval);
        const auto total = [&] {
            long long s = 0;
            for (ColorSet m : cur) s += std::popcount(m);
            return s;
        };
        const auto feasible_change = [&](int col, ColorSet mask) {
            for (const auto& [c1, c2] : triangles_at[static_cast<std::size_t>(col)]) {
                if (!sets_compatible(info[static_cast<std::size_t>(cur[static_cast<std::size_t>(c1)])],
                                     info[static_cast<std::size_t>(cur[static_cast<std::size_t>(c2)])],
                                     info[static_cast<std::size_t>(mask)]))
                    return false;
            }
            // this column also participates as an earlier column elsewhere
            for (int k = col + 1; k < cols; ++k) {
                for (const auto& [c1, c2] : triangles_at[static_cast<std::size_t>(k)]) {
                    if (c1 != col && c2 != col) continue;
                    const ColorSet a = c1 == col ? mask : cur[static_cast<std::size_t>(c1)];
                    const ColorSet b = c2 == col ? mask : cur[static_cast<std::size_t>(c2)];
                    if (!sets_compatible(info[static_cast<std::size_t>(a)], info[static_cast<std::size_t>(b)],
                                         info[static_cast<std::size_t>(cur[static_cast<std::size_t>(k)])]))
                        return false;
                }
            }
            return true;
        };
        SplitMix64 rng(0x6D6178696EULL);
        for (int round = 0; round < 200 * cols * r; ++round) {
            const int col = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(cols)));
            const int color = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(r)));
            const ColorSet mask = cur[static_cast<std::size_t>(col)] | (ColorSet{1} << (color - 1));
            if (mask != cur[static_cast<std::size_t>(col)] && feasible_change(col, mask))
                cur[static_cast<std::size_t>(col)] = mask;
        }
        out.max_size = total();
        out.exact = false;
    }
    out.ok = out.max_size <= out.bound;
    return out;
}

// ---------------------------------------------------------------------------

SupersaturationAudit supersaturation_audit(int n, int r, double epsilon,
                                           std::span<const std::uint32_t> s,
                                           int odd_assert_min_n) {
    if (epsilon <= 0.0) throw InvalidArgumentError("epsilon must be positive");
    auto [h, layout] = build_metric_hypergraph(n, r);

    std::vector<bool> column_hit(static_cast<std::size_t>(layout.columns()), false);
    for (std::uint32_t vid : s) {
        if (vid >= static_cast<std::uint32_t>(layout.vertex_count()))
            throw InvalidArgumentError("vertex id out of range");
        column_hit[static_cast<std::size_t>(layout.column_of(vid))] = true;
    }
    for (bool hit : column_hit) {
        if (!hit) throw EmptyColumnError("S leaves a column empty");
    }
    const double min_size = (1.0 + epsilon) * static_cast<double>(choose2(n)) * m_of_r(r);
    if (static_cast<double>(s.size()) < min_size)
        throw TooSmallSetError("S is below the (1+epsilon) C(n,2) m(r) threshold");

    SupersaturationAudit out;
    out.epsilon = epsilon;
    out.edge_count = edges_within(h, s);
    const double nc3 = static_cast<double>(choose3(n));
    if (r % 2 == 0) {
        out.required = epsilon / 10.0 * nc3;
        out.asserted = true;
    } else {
        out.required = std::pow(epsilon, 4) / 40000.0 * nc3;
        out.asserted = odd_assert_min_n >= 0 && n >= odd_assert_min_n;
    }
    out.ok = static_cast<double>(out.edge_count) >= out.required;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

double log_pow(double n, double e) { return std::pow(std::log(n), e); }

// scan for the smallest integer n where check(n) holds; -1 if none under 2e5
long long smallest_holding(const std::function<bool(double)>& check) {
    for (long long n = 3; n <= 200000; ++n) {
        if (check(static_cast<double>(n))) return n;
    }
    return -1;
}

}  // namespace

DiscreteChainParameters discrete_chain_parameters(int n, int r, double delta, int c) {
    if (n < 3 || r < 1 || delta <= 0.0 || c < 1)
        throw InvalidArgumentError("need n >= 3, r >= 1, delta > 0, c >= 1");
    DiscreteChainParameters out;
    out.n = n;
    out.r = r;
    out.delta = delta;
    out.c = c;
    const double nd = n;
    out.p = 1.0 / (r * log_pow(nd, 2.0 + delta));
    out.alpha = 1e10 * c * log_pow(nd, 4.0 + 2.0 * delta) / nd;

    const long long edges = 3 * choose3(n) * choose3(r);  // exact closed form
    const long long vertices = static_cast<long long>(r) * choose2(n);
    const double dbar_lower = static_cast<double>(r) * r * nd / 64.0;

    double delta_exact = -1.0;
    if (vertices <= global_caps().hypergraph_vertices &&
        static_cast<std::uint64_t>(edges) < global_caps().enumeration_budget && edges > 0) {
        auto [h, layout] = build_metric_hypergraph(n, r);
        (void)layout;
        out.stats = degree_stats(h);
        out.exact_stats = true;
        delta_exact = delta_hp(out.stats, out.p);
    }

    // closed-form value from the Delta2 <= r, Delta3 = 1, dbar >= r^2 n/64 bounds
    const auto delta_closed = [r](double nn, double p) {
        const double dl = static_cast<double>(r) * r * nn / 64.0;
        return 4.0 * r / (dl * p) + 2.0 / (dl * p * p);
    };
    const auto p_of = [r, delta](double nn) { return 1.0 / (r * log_pow(nn, 2.0 + delta)); };
    const auto alpha_of = [c, delta](double nn) { return 1e10 * c * log_pow(nn, 4.0 + 2.0 * delta) / nn; };
    const auto display_of = [delta](double nn) {
        return 4.0 * (64.0 * log_pow(nn, 2.0 + delta) / nn + 64.0 * log_pow(nn, 4.0 + 2.0 * delta) / (2.0 * nn));
    };

    {
        InequalityCheck chk;
        chk.name = "p_identity";
        chk.lhs = out.p * r * log_pow(nd, 2.0 + delta);
        chk.rhs = 1.0;
        chk.holds = std::abs(chk.lhs - 1.0) <= 1e-12;
        out.chain.push_back(chk);
    }
    {
        InequalityCheck chk;
        chk.name = "alpha_identity";
        chk.lhs = out.alpha * nd / (1e10 * c * log_pow(nd, 4.0 + 2.0 * delta));
        chk.rhs = 1.0;
        chk.holds = std::abs(chk.lhs - 1.0) <= 1e-12;
        out.chain.push_back(chk);
    }
    {
        InequalityCheck chk;
        chk.name = "p_upper";
        chk.lhs = out.p;
        chk.rhs = 1.0 / (729.0 * c);
        chk.holds = chk.lhs <= chk.rhs;
        chk.smallest_n = smallest_holding([&](double nn) {
            return p_of(nn) <= 1.0 / (729.0 * c);
        });
        out.chain.push_back(chk);
    }
    {
        InequalityCheck chk;
        chk.name = "delta_vs_display";
        chk.lhs = out.exact_stats ? delta_exact : delta_closed(nd, out.p);
        chk.rhs = display_of(nd);
        chk.holds = chk.lhs <= chk.rhs;
        out.chain.push_back(chk);
    }
    {
        InequalityCheck chk;
        chk.name = "display_vs_alpha";
        chk.lhs = display_of(nd);
        chk.rhs = out.alpha / (27.0 * c);
        chk.holds = chk.lhs <= chk.rhs;
        chk.smallest_n = smallest_holding([&](double nn) {
            return display_of(nn) <= alpha_of(nn) / (27.0 * c);
        });
        out.chain.push_back(chk);
    }
    {
        InequalityCheck chk;
        chk.name = "container_edge_bound";
        chk.lhs = out.alpha * static_cast<double>(edges);
        chk.rhs = 1e4 * c * std::pow(static_cast<double>(r), 3) * nd * nd *
                  log_pow(nd, 4.0 + 2.0 * delta);
        chk.holds = chk.lhs <= chk.rhs;
        out.chain.push_back(chk);
    }
    {
        InequalityCheck chk;
        chk.name = "log_count_bound";
        chk.lhs = 19683.0 * c * (1.0 + std::log(1.0 / out.alpha)) *
                  static_cast<double>(vertices) * out.p * std::log(1.0 / out.p);
        chk.rhs = c * 59049.0 * r * nd * nd * std::log(nd) * std::log(static_cast<double>(r)) *
                  std::log(std::log(nd)) / (r * log_pow(nd, 2.0 + delta));
        chk.holds = chk.lhs <= chk.rhs;
        out.chain.push_back(chk);
    }
    {
        InequalityCheck chk;
        chk.name = "dbar_lower_bound";  // dbar >= r^2 n / 64
        chk.lhs = dbar_lower;
        chk.rhs = 9.0 * static_cast<double>(choose3(n)) * static_cast<double>(choose3(r)) /
                  static_cast<double>(vertices);
        chk.holds = chk.lhs <= chk.rhs;
        out.chain.push_back(chk);
    }
    return out;
}

// ---------------------------------------------------------------------------

PolytopeEstimate polytope_volume_mc(int n, long long samples, std::uint64_t seed, int workers,
                                    double coord_min) {
    if (n < 3) throw InvalidArgumentError("polytope estimate needs n >= 3");
    if (samples < 10000) throw InvalidArgumentError("need at least 10^4 samples");
    if (coord_min < 0.0 || coord_min >= 1.0)
        throw InvalidArgumentError("coordinate floor must be in [0,1)");

    ColumnLayout layout(n, 2);
    std::vector<std::array<int, 3>> triples;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                triples.push_back({layout.column(u, v), layout.column(u, w), layout.column(v, w)});

    constexpr long long kBlock = 65536;
    const int blocks = static_cast<int>((samples + kBlock - 1) / kBlock);
    std::vector<long long> hits_per_block(static_cast<std::size_t>(blocks), 0);

    parallel_blocks(blocks, workers, [&](int block) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(block)));
        const long long count =
            std::min(kBlock, samples - static_cast<long long>(block) * kBlock);
        std::vector<double> d(static_cast<std::size_t>(layout.columns()));
        long long hits = 0;
        for (long long i = 0; i < count; ++i) {
            for (auto& x : d) x = coord_min + (1.0 - coord_min) * rng.next_double();
            bool ok = true;
            for (const auto& t : triples) {
                const double a = d[static_cast<std::size_t>(t[0])];
                const double b = d[static_cast<std::size_t>(t[1])];
                const double c = d[static_cast<std::size_t>(t[2])];
                if (a > b + c || b > a + c || c > a + b) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++hits;
        }
        hits_per_block[static_cast<std::size_t>(block)] = hits;
    });

    PolytopeEstimate out;
    out.n = n;
    out.samples = samples;
    out.seed = seed;
    out.coord_min = coord_min;
    for (long long h : hits_per_block) out.hits += h;
    out.rate = static_cast<double>(out.hits) / static_cast<double>(samples);
    const double exponent = 1.0 / static_cast<double>(choose2(n));
    out.estimate = std::pow(out.rate, exponent);
    const double sigma = std::sqrt(std::max(out.rate * (1.0 - out.rate), 0.0) /
                                   static_cast<double>(samples));
    out.ci_low = std::pow(std::max(out.rate - 1.96 * sigma, 0.0), exponent);
    out.ci_high = std::pow(std::min(out.rate + 1.96 * sigma, 1.0), exponent);
    return out;
}

CeilCheck ceil_superadditivity(double a, double b, double c) {
    CeilCheck out;
    out.premise = a + b >= c;
    out.holds = !out.premise || (std::ceil(a) + std::ceil(b) >= std::ceil(c));
    return out;
}

ContinuousChainReport continuous_bound_chain(double n, double delta, int c) {
    if (delta <= 0.0 || delta >= 0.25) throw DeltaOutOfRangeError("need 0 < delta < 1/4");
    if (n < 3.0 || c < 1) throw InvalidArgumentError("need n >= 3 and c >= 1");

    ContinuousChainReport out;
    out.n = n;
    out.delta = delta;
    out.c = c;
    const double target = std::pow(n, 1.0 / 6.0 - delta / 2.0);
    out.r = std::max(2, 2 * static_cast<int>(std::llround(target / 2.0)));
    out.p = std::pow(n, -(1.0 / 3.0 - delta / 4.0));
    out.alpha = 300.0 * c * std::pow(n, delta - 2.0 / 3.0);
    out.final_bound = 0.5 + std::pow(n, -(1.0 / 6.0 - delta));

    const double r = out.r, p = out.p;
    const double chain1_lhs = 300.0 * (1.0 / (r * n * p) + 1.0 / (p * p * r * r * n));
    const double chain1_rhs = 300.0 * (std::pow(n, 1.0 / 3.0 - delta / 4.0) / std::pow(n, 7.0 / 6.0 - delta / 2.0) +
                                       std::pow(n, 2.0 / 3.0 - delta / 2.0) / std::pow(n, 4.0 / 3.0 - delta));
    out.steps.push_back({"delta_vs_exponent_display", chain1_lhs, chain1_rhs,
                         chain1_lhs <= chain1_rhs * (1.0 + 1e-12), -1});
    out.steps.push_back({"exponent_display_vs_alpha", chain1_rhs, out.alpha,
                         chain1_rhs <= out.alpha, -1});
    const double e_lhs = out.alpha * n * n * n * r * r * r;
    const double e_rhs = std::pow(n, 3.0 - 1.0 / 6.0 - delta / 4.0);
    out.steps.push_back({"container_edge_bound", e_lhs, e_rhs, e_lhs <= e_rhs, -1});
    const double l_lhs = n * n * r * p * std::pow(std::log(n), 3);
    const double l_rhs = std::pow(n, 2.0 - 1.0 / 6.0 - delta / 5.0);
    out.steps.push_back({"log_count_bound", l_lhs, l_rhs, l_lhs <= l_rhs, -1});
    const double m1 = static_cast<double>(m_of_r(out.r));
    const double per_edge = (m1 + 1.0) / r *
                            std::exp(std::pow(n, 2.0 - 1.0 / 6.0 - delta / 8.0) / (n * (n - 1.0) / 2.0));
    const double mid = 0.5 * (1.0 + 4.0 / r) * (1.0 + std::pow(n, -(1.0 / 6.0 + delta / 9.0)));
    out.steps.push_back({"per_edge_vs_mid", per_edge, mid, per_edge <= mid, -1});
    out.steps.push_back({"mid_vs_final", mid, out.final_bound, mid <= out.final_bound, -1});
    return out;
}

}  // namespace clab
