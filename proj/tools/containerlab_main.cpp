// containerlab: reproducible experiment runner. Standard output carries
// exactly one report (JSON or CSV); progress goes to standard error; the
// exit status is 0 iff every asserted check passed.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "containerlab/acceptance.hpp"
#include "containerlab/bigint.hpp"
#include "containerlab/c4.hpp"
#include "containerlab/caps.hpp"
#include "containerlab/constants.hpp"
#include "containerlab/container.hpp"
#include "containerlab/errors.hpp"
#include "containerlab/graph.hpp"
#include "containerlab/hypergraph.hpp"
#include "containerlab/metric.hpp"
#include "containerlab/report.hpp"
#include "containerlab/rng.hpp"

namespace {

using namespace clab;

struct GlobalOptions {
    std::uint64_t seed = 0;
    int workers = 1;
    std::string format = "json";
    std::string out_path;
    bool no_timing = false;
    std::uint64_t cap = 0;  // 0 = keep the environment/default budget
};

struct GraphInput {
    std::string in_path;
    std::string gen = "random";
    int n = 12;
    double p = 0.5;
    int q = 3;
    std::uint64_t gseed = 1;
    bool square = false;
};

void add_graph_options(CLI::App* cmd, GraphInput& gi, bool with_square = false) {
    cmd->add_option("--in", gi.in_path, "read the graph from a file (n=<int> header, 'u v' lines)");
    cmd->add_option("--gen", gi.gen, "generator when --in is absent: random|polarity|cycle|complete|petersen")
        ->check(CLI::IsMember({"random", "polarity", "cycle", "complete", "petersen"}));
    cmd->add_option("--gn", gi.n, "vertex count for generated graphs");
    cmd->add_option("--gp", gi.p, "edge probability for --gen random");
    cmd->add_option("--q", gi.q, "field order for --gen polarity");
    cmd->add_option("--gseed", gi.gseed, "seed for --gen random");
    if (with_square) cmd->add_flag("--square", gi.square, "square the input before running");
}

Graph load_graph(const GraphInput& gi) {
    Graph g;
    if (!gi.in_path.empty()) {
        std::ifstream in(gi.in_path);
        if (!in.good()) throw InvalidConfigError("cannot open graph file " + gi.in_path);
        g = Graph::read(in);
    } else if (gi.gen == "random") {
        g = random_graph(gi.n, gi.p, gi.gseed);
    } else if (gi.gen == "polarity") {
        g = polarity_graph(gi.q);
    } else if (gi.gen == "cycle") {
        g = Graph::cycle(gi.n);
    } else if (gi.gen == "complete") {
        g = Graph::complete(gi.n);
    } else {  // petersen
        g = Graph(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
    }
    return gi.square ? proper_square(g) : g;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

ColorSet parse_color_set(const std::string& csv, int r) {
    ColorSet mask = 0;
    for (int c : parse_int_list(csv)) {
        if (c < 1 || c > r) throw InvalidConfigError("color out of [1,r]: " + std::to_string(c));
        mask |= ColorSet{1} << (c - 1);
    }
    return mask;
}

int emit(Report& rep, const GlobalOptions& go, double wall_ms) {
    rep.wall_time_ms = wall_ms;
    rep.include_wall_time = !go.no_timing;
    rep.set_config("seed", static_cast<std::int64_t>(go.seed));
    rep.set_config("workers", static_cast<std::int64_t>(go.workers));
    const std::string text = go.format == "csv" ? rep.render_csv() : rep.render_json();
    if (go.format == "json") {
        std::string why;
        if (!report_json_matches_schema(text, &why))
            throw std::logic_error("report failed schema self-check: " + why);
    }
    if (go.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(go.out_path);
        if (!out.good()) throw InvalidConfigError("cannot open output file " + go.out_path);
        out << text;
    }
    return rep.all_asserted_pass() ? 0 : 1;
}

void emit_graph(const Graph& g, const GlobalOptions& go) {
    if (go.out_path.empty()) {
        g.write(std::cout);
    } else {
        std::ofstream out(go.out_path);
        if (!out.good()) throw InvalidConfigError("cannot open output file " + go.out_path);
        g.write(out);
    }
}

Check make_check(std::string name, double lhs, std::string rel, double rhs, bool pass,
                 bool asserted, ValueSource source) {
    return Check{std::move(name), lhs, std::move(rel), rhs, pass, asserted, source};
}

double elapsed_ms(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

int run_metric_count(const GlobalOptions& go, int n, int r, const std::string& method) {
    Report rep;
    rep.command = "metric count";
    rep.set_config("n", std::int64_t{n});
    rep.set_config("r", std::int64_t{r});
    rep.set_config("method", method);
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<BigUint> brute, hyper;
    if (method != "hypergraph") brute = brute_force_count(n, r, go.workers);
    if (method != "brute") hyper = count_via_hypergraph(n, r, go.workers);
    if (brute) rep.set_output("metric_count", brute->to_string());
    if (hyper) rep.set_output("hypergraph_count", hyper->to_string());
    if (!brute && hyper) rep.set_output("metric_count", hyper->to_string());
    if (brute && hyper) {
        rep.add_check(make_check("count_routes_agree", brute->log2(), "==", hyper->log2(),
                                 *brute == *hyper, true, ValueSource::Computed));
    }
    const BigUint lower = BigUint::pow(static_cast<std::uint64_t>(m_of_r(r)),
                                       static_cast<unsigned>(n * (n - 1) / 2));
    rep.set_output("lower_bound_log2", lower.log2());
    if (brute) {
        rep.add_check(make_check("count_at_least_interval_family", brute->log2(), ">=",
                                 lower.log2(), *brute >= lower, true, ValueSource::Computed));
    }
    return emit(rep, go, elapsed_ms(t0));
}

int run_metric_stats(const GlobalOptions& go, int n, int r) {
    Report rep;
    rep.command = "metric hypergraph-stats";
    rep.set_config("n", std::int64_t{n});
    rep.set_config("r", std::int64_t{r});
    const auto t0 = std::chrono::steady_clock::now();
    auto [h, layout] = build_metric_hypergraph(n, r);
    (void)layout;
    const DegreeStats s = degree_stats(h);
    rep.set_output("vertices", std::int64_t{h.vertex_count()});
    rep.set_output("edges", static_cast<std::int64_t>(h.edge_count()));
    rep.set_output("delta1", static_cast<std::int64_t>(s.delta1));
    rep.set_output("delta2", static_cast<std::int64_t>(s.delta2));
    rep.set_output("delta3", static_cast<std::int64_t>(s.delta3));
    rep.set_output("dbar", s.dbar.value());
    rep.add_check(make_check("delta1_le_n_r2", static_cast<double>(s.delta1), "<=",
                             static_cast<double>(n) * r * r,
                             s.delta1 <= static_cast<long long>(n) * r * r, true,
                             ValueSource::Computed));
    rep.add_check(make_check("delta2_le_r", static_cast<double>(s.delta2), "<=", r, s.delta2 <= r,
                             true, ValueSource::Computed));
    rep.add_check(make_check("delta3_le_1", static_cast<double>(s.delta3), "<=", 1.0,
                             s.delta3 <= 1, true, ValueSource::Computed));
    const double dbar_floor = static_cast<double>(r) * r * n / 64.0;
    rep.add_check(make_check("dbar_ge_r2n_over_64", s.dbar.value(), ">=", dbar_floor,
                             s.dbar.value() >= dbar_floor, n >= 6 && r >= 3,
                             ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

int run_metric_local(const GlobalOptions& go, int r, const std::string& a, const std::string& b,
                     const std::string& c, bool scan) {
    Report rep;
    rep.command = "metric local-criterion";
    rep.set_config("r", std::int64_t{r});
    rep.set_config("scan", scan);
    const auto t0 = std::chrono::steady_clock::now();
    if (scan) {
        const ColorSet all = (ColorSet{1} << r) - 1;
        std::int64_t violation_free = 0, bound_failures = 0;
        for (ColorSet sa = 1; sa <= all; ++sa)
            for (ColorSet sb = 1; sb <= all; ++sb)
                for (ColorSet sc = 1; sc <= all; ++sc) {
                    const LocalCriterionResult res = local_criterion_check(sa, sb, sc, r);
                    if (res.violation_free) {
                        ++violation_free;
                        if (!res.bound_ok) ++bound_failures;
                    }
                }
        rep.set_output("violation_free_triples", violation_free);
        rep.set_output("bound_failures", bound_failures);
        rep.add_check(make_check("no_bound_failures", static_cast<double>(bound_failures), "==",
                                 0.0, bound_failures == 0, true, ValueSource::Computed));
    } else {
        const LocalCriterionResult res = local_criterion_check(
            parse_color_set(a, r), parse_color_set(b, r), parse_color_set(c, r), r);
        rep.set_config("a", a);
        rep.set_config("b", b);
        rep.set_config("c", c);
        rep.set_output("violation_free", res.violation_free);
        rep.set_output("size_sum", std::int64_t{res.size_sum});
        rep.set_output("bound", std::int64_t{res.bound});
        rep.add_check(make_check("size_bound", res.size_sum, "<=", res.bound, res.bound_ok, true,
                                 ValueSource::Computed));
    }
    return emit(rep, go, elapsed_ms(t0));
}

int run_metric_supersaturation(const GlobalOptions& go, int n, int r, double epsilon,
                               const std::string& s_file, int assert_min_n) {
    Report rep;
    rep.command = "metric supersaturation";
    rep.set_config("n", std::int64_t{n});
    rep.set_config("r", std::int64_t{r});
    rep.set_config("epsilon", epsilon);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::uint32_t> s;
    if (s_file.empty()) {
        const ColumnLayout layout(n, r);
        for (int v = 0; v < layout.vertex_count(); ++v) s.push_back(static_cast<std::uint32_t>(v));
        rep.set_config("set", std::string("full"));
    } else {
        std::ifstream in(s_file);
        if (!in.good()) throw InvalidConfigError("cannot open set file " + s_file);
        std::uint32_t v = 0;
        while (in >> v) s.push_back(v);
        rep.set_config("set", s_file);
    }
    const SupersaturationAudit audit = supersaturation_audit(n, r, epsilon, s, assert_min_n);
    rep.set_output("edge_count", static_cast<std::int64_t>(audit.edge_count));
    rep.set_output("required", audit.required);
    rep.add_check(make_check("supersaturation", static_cast<double>(audit.edge_count), ">=",
                             audit.required, audit.ok, audit.asserted, ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

int run_metric_polytope(const GlobalOptions& go, int n, std::int64_t samples, double coord_min,
                        double delta) {
    Report rep;
    rep.command = "metric polytope";
    rep.set_config("n", std::int64_t{n});
    rep.set_config("samples", samples);
    rep.set_config("coord_min", coord_min);
    rep.set_config("delta", delta);
    const auto t0 = std::chrono::steady_clock::now();
    const PolytopeEstimate est = polytope_volume_mc(n, samples, go.seed, go.workers, coord_min);
    rep.set_output("hits", static_cast<std::int64_t>(est.hits));
    rep.set_output("rate", est.rate);
    rep.set_output("per_edge_estimate", est.estimate);
    rep.set_output("ci_low", est.ci_low);
    rep.set_output("ci_high", est.ci_high);
    if (n == 3 && coord_min == 0.0) {
        const double sigma = std::sqrt(0.25 / static_cast<double>(samples));
        rep.add_check(make_check("rate_near_half", std::abs(est.rate - 0.5), "<=", 4.0 * sigma,
                                 std::abs(est.rate - 0.5) <= 4.0 * sigma, true,
                                 ValueSource::Computed));
    }
    const double bound = 0.5 + std::pow(static_cast<double>(n), -(1.0 / 6.0 - delta));
    rep.add_check(make_check("estimate_vs_distant_n_bound", est.estimate, "<=", bound,
                             est.estimate <= bound, false, ValueSource::Published));
    rep.add_check(make_check("estimate_vs_half", est.estimate, ">=", 0.5, est.estimate >= 0.5,
                             false, ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

int run_metric_params(const GlobalOptions& go, int n, int r, double delta, int c) {
    Report rep;
    rep.command = "metric params";
    rep.set_config("n", std::int64_t{n});
    rep.set_config("r", std::int64_t{r});
    rep.set_config("delta", delta);
    rep.set_config("c", std::int64_t{c});
    const auto t0 = std::chrono::steady_clock::now();
    const DiscreteChainParameters params = discrete_chain_parameters(n, r, delta, c);
    rep.set_output("p", params.p);
    rep.set_output("alpha", params.alpha);
    rep.set_output("exact_stats", params.exact_stats);
    for (const auto& chk : params.chain) {
        const bool identity = chk.name == "p_identity" || chk.name == "alpha_identity";
        rep.add_check(make_check(chk.name, chk.lhs, "<=", chk.rhs, chk.holds, identity,
                                 identity ? ValueSource::Exact : ValueSource::Computed));
        if (chk.smallest_n >= 0) rep.set_output("smallest_n." + chk.name, chk.smallest_n);
    }
    return emit(rep, go, elapsed_ms(t0));
}

int run_metric_chain(const GlobalOptions& go, double n, double delta, int c) {
    Report rep;
    rep.command = "metric chain";
    rep.set_config("n", n);
    rep.set_config("delta", delta);
    rep.set_config("c", std::int64_t{c});
    const auto t0 = std::chrono::steady_clock::now();
    const ContinuousChainReport chain = continuous_bound_chain(n, delta, c);
    rep.set_output("r", std::int64_t{chain.r});
    rep.set_output("p", chain.p);
    rep.set_output("alpha", chain.alpha);
    rep.set_output("final_bound", chain.final_bound);
    rep.add_check(make_check("r_is_even", static_cast<double>(chain.r % 2), "==", 0.0,
                             chain.r % 2 == 0, true, ValueSource::Exact));
    for (const auto& step : chain.steps)
        rep.add_check(make_check(step.name, step.lhs, "<=", step.rhs, step.holds, false,
                                 ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

int run_metric_max_indep(const GlobalOptions& go, int n, int r) {
    Report rep;
    rep.command = "metric max-indep";
    rep.set_config("n", std::int64_t{n});
    rep.set_config("r", std::int64_t{r});
    const auto t0 = std::chrono::steady_clock::now();
    const MaxIndependentAudit audit = max_independent_audit(n, r);
    rep.set_output("max_size", static_cast<std::int64_t>(audit.max_size));
    rep.set_output("bound", static_cast<std::int64_t>(audit.bound));
    rep.set_output("conjectured_bound", static_cast<std::int64_t>(audit.conjectured_bound));
    rep.set_output("exact", audit.exact);
    rep.add_check(make_check("max_le_bound", static_cast<double>(audit.max_size), "<=",
                             static_cast<double>(audit.bound), audit.ok, audit.exact,
                             ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

int run_metric_ceil(const GlobalOptions& go, double a, double b, double c, std::int64_t trials) {
    Report rep;
    rep.command = "metric ceil";
    const auto t0 = std::chrono::steady_clock::now();
    if (trials > 0) {
        rep.set_config("trials", trials);
        SplitMix64 rng(go.seed);
        std::int64_t failures = 0;
        for (std::int64_t i = 0; i < trials; ++i) {
            const double x = 10.0 * rng.next_double() - 5.0;
            const double y = 10.0 * rng.next_double() - 5.0;
            const double z = x + y - 3.0 * rng.next_double();
            if (!ceil_superadditivity(x, y, z).holds) ++failures;
        }
        rep.set_output("failures", failures);
        rep.add_check(make_check("no_failures", static_cast<double>(failures), "==", 0.0,
                                 failures == 0, true, ValueSource::Computed));
    } else {
        rep.set_config("a", a);
        rep.set_config("b", b);
        rep.set_config("c", c);
        const CeilCheck res = ceil_superadditivity(a, b, c);
        rep.set_output("premise", res.premise);
        rep.add_check(make_check("ceil_superadditive", std::ceil(a) + std::ceil(b), ">=",
                                 std::ceil(c), res.holds, true, ValueSource::Exact));
    }
    return emit(rep, go, elapsed_ms(t0));
}

// ---------------------------------------------------------------------------

std::vector<std::int64_t> bits_to_list(const Bits128& b) {
    std::vector<std::int64_t> out;
    b.for_each([&](int v) { out.push_back(v); });
    return out;
}

int run_containers_build(const GlobalOptions& go, const GraphInput& gi, const std::string& set_csv,
                         int stop, const std::string& tiebreak_csv) {
    Report rep;
    rep.command = "containers build";
    const auto t0 = std::chrono::steady_clock::now();
    const Graph square = load_graph(gi);
    Bits128 ind;
    for (int v : parse_int_list(set_csv)) ind.set(v);
    const std::vector<int> tiebreak = parse_int_list(tiebreak_csv);
    rep.set_config("stop_size", std::int64_t{stop});
    rep.set_config("set", set_csv);
    const GreedyContainerResult built = greedy_container(square, ind, tiebreak, stop);
    rep.set_output("fingerprint", std::vector<std::int64_t>(built.fingerprint.vertices.begin(),
                                                            built.fingerprint.vertices.end()));
    rep.set_output("container", bits_to_list(built.container));
    rep.set_output("removal_counts", std::vector<std::int64_t>(built.removal_counts.begin(),
                                                               built.removal_counts.end()));
    Bits128 t_bits;
    for (int v : built.fingerprint.vertices) t_bits.set(v);
    rep.add_check(make_check("fingerprint_inside_set",
                             static_cast<double>((ind & t_bits).count()), "==",
                             static_cast<double>(t_bits.count()), ind.contains(t_bits), true,
                             ValueSource::Exact));
    rep.add_check(make_check("set_inside_container",
                             static_cast<double>((built.container & ind).count()), "==",
                             static_cast<double>(ind.count()), built.container.contains(ind), true,
                             ValueSource::Exact));
    return emit(rep, go, elapsed_ms(t0));
}

int run_containers_enumerate(const GlobalOptions& go, const GraphInput& gi, int stop, int max_fp,
                             const std::string& family_out) {
    Report rep;
    rep.command = "containers enumerate";
    const auto t0 = std::chrono::steady_clock::now();
    const Graph square = load_graph(gi);
    const ContainerFamily family =
        enumerate_all_containers(square, {}, stop, max_fp < 0 ? square.n() : max_fp);
    rep.set_config("stop_size", std::int64_t{stop});
    rep.set_output("family_size", static_cast<std::int64_t>(family.members.size()));
    std::int64_t max_used = 0, max_container = 0;
    for (const auto& [t, c] : family.members) {
        max_used = std::max<std::int64_t>(max_used, static_cast<std::int64_t>(t.size()));
        max_container = std::max<std::int64_t>(max_container, c.count());
    }
    rep.set_output("max_fingerprint_used", max_used);
    rep.set_output("max_container_size", max_container);
    if (!family_out.empty()) {
        std::ofstream out(family_out);
        if (!out.good()) throw InvalidConfigError("cannot open family file " + family_out);
        family.write(out);
        rep.set_output("family_file", family_out);
    }
    return emit(rep, go, elapsed_ms(t0));
}

int run_containers_coverage(const GlobalOptions& go, const GraphInput& gi, int stop, int max_fp) {
    Report rep;
    rep.command = "containers coverage";
    const auto t0 = std::chrono::steady_clock::now();
    const Graph square = load_graph(gi);
    if (square.n() > 20) throw TooLargeError("coverage oracle enumerates 2^n sets; n capped at 20");
    const ContainerFamily family =
        enumerate_all_containers(square, {}, stop, max_fp < 0 ? square.n() : max_fp);
    std::int64_t independent_sets = 0, covered = 0;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(square.n()), 0);
    for (const auto& [u, v] : square.edges()) {
        adj[static_cast<std::size_t>(u)] |= 1U << v;
        adj[static_cast<std::size_t>(v)] |= 1U << u;
    }
    for (std::uint32_t mask = 0; mask < (1U << square.n()); ++mask) {
        bool ind = true;
        for (std::uint32_t m = mask; m && ind; m &= m - 1) {
            if (adj[static_cast<std::size_t>(std::countr_zero(m))] & mask) ind = false;
        }
        if (!ind) continue;
        ++independent_sets;
        Bits128 bits;
        for (std::uint32_t m = mask; m; m &= m - 1) bits.set(std::countr_zero(m));
        const GreedyContainerResult built = greedy_container(square, bits, {}, stop);
        const auto it = family.members.find(built.fingerprint.vertices);
        if (it != family.members.end() && it->second == built.container && it->second.contains(bits))
            ++covered;
    }
    rep.set_config("stop_size", std::int64_t{stop});
    rep.set_output("independent_sets", independent_sets);
    rep.set_output("covered", covered);
    rep.set_output("family_size", static_cast<std::int64_t>(family.members.size()));
    rep.add_check(make_check("family_covers_every_independent_set", static_cast<double>(covered),
                             "==", static_cast<double>(independent_sets),
                             covered == independent_sets, true, ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

int run_containers_right(const GlobalOptions& go, const GraphInput& gi, double epsilon) {
    Report rep;
    rep.command = "containers right";
    rep.set_config("epsilon", epsilon);
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = load_graph(gi);
    const RightContainerSet rc = build_right_containers(g, epsilon);
    std::int64_t measure_failures = 0, shortcuts = 0;
    bool containment = true;
    for (const auto& e : rc.entries) {
        if (!e.measure_ok) ++measure_failures;
        if (e.shortcut) ++shortcuts;
        Bits128 suffix;
        for (int j = e.position; j < g.n(); ++j)
            suffix.set(rc.ordering.order[static_cast<std::size_t>(j)]);
        if (!e.container.contains(g.neighbors(e.vertex) & suffix)) containment = false;
    }
    rep.set_output("audited_positions", static_cast<std::int64_t>(rc.entries.size()));
    rep.set_output("shortcut_positions", shortcuts);
    rep.set_output("measure_failures", measure_failures);
    rep.add_check(make_check("containers_hold_right_neighborhoods", containment ? 1.0 : 0.0, "==",
                             1.0, containment, true, ValueSource::Exact));
    rep.add_check(make_check("degree_measure_bound", static_cast<double>(measure_failures), "==",
                             0.0, measure_failures == 0, false, ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

int run_containers_classify(const GlobalOptions& go, const GraphInput& gi, double epsilon) {
    Report rep;
    rep.command = "containers classify";
    rep.set_config("epsilon", epsilon);
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = load_graph(gi);
    const RightContainerSet rc = build_right_containers(g, epsilon);
    const VertexClassification cls = classify_vertices(g, rc.ordering, rc, epsilon);
    std::int64_t wins = 0;
    for (bool w : cls.win) wins += w ? 1 : 0;
    rep.set_output("win_positions", wins);
    rep.set_output("large", static_cast<std::int64_t>(cls.large.count()));
    rep.set_output("huge", static_cast<std::int64_t>(cls.huge.count()));
    rep.set_output("alive1", static_cast<std::int64_t>(cls.alive1.count()));
    rep.set_output("c_star", cls.c_star);
    std::int64_t fewlarge_failures = 0, global_failures = 0;
    for (const auto& a : cls.audits) {
        if (!a.fewlarge_ok) ++fewlarge_failures;
        if (!a.global_ok) ++global_failures;
    }
    rep.set_output("fewlarge_failures", fewlarge_failures);
    rep.add_check(make_check("nesting_huge_large_alive", cls.nesting_ok ? 1.0 : 0.0, "==", 1.0,
                             cls.nesting_ok, false, ValueSource::Computed));
    rep.add_check(make_check("alive_global_bound", static_cast<double>(global_failures), "==", 0.0,
                             global_failures == 0, false, ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

// ---------------------------------------------------------------------------

int run_c4_count(const GlobalOptions& go, int n) {
    Report rep;
    rep.command = "c4 count";
    rep.set_config("n", std::int64_t{n});
    const auto t0 = std::chrono::steady_clock::now();
    const BigUint fn = count_c4_free_graphs(n, go.workers);
    rep.set_output("count", fn.to_string());
    rep.set_output("log2_count", fn.log2());
    const double bound = entropy_count_bound(n, 0.0);
    rep.add_check(make_check("log2_below_entropy_bound", fn.log2(), "<", bound, fn.log2() < bound,
                             true, ValueSource::Computed));
    if (n > 1) {
        const BigUint prev = count_c4_free_graphs(n - 1, go.workers);
        rep.add_check(make_check("monotone_in_n", prev.log2(), "<=", fn.log2(), prev <= fn, true,
                                 ValueSource::Computed));
    }
    return emit(rep, go, elapsed_ms(t0));
}

int run_c4_random(const GlobalOptions& go, int n, double p, int trials, const std::string& mode) {
    Report rep;
    rep.command = "c4 random";
    rep.set_config("n", std::int64_t{n});
    rep.set_config("p", p);
    rep.set_config("trials", std::int64_t{trials});
    rep.set_config("mode", mode);
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentMode m = ExperimentMode::Auto;
    if (mode == "exact") m = ExperimentMode::Exact;
    else if (mode == "heuristic") m = ExperimentMode::Heuristic;
    const ExperimentSummary summary = c4_random_experiment(n, p, trials, go.seed, m, go.workers);
    rep.set_output("mode_used", summary.mode);
    rep.set_output("max_size", std::int64_t{summary.max_size});
    rep.set_output("mean_size", summary.mean_size);
    rep.set_output("heuristic_sizes", std::vector<std::int64_t>(summary.heuristic_sizes.begin(),
                                                                summary.heuristic_sizes.end()));
    if (!summary.exact_sizes.empty()) {
        rep.set_output("exact_sizes", std::vector<std::int64_t>(summary.exact_sizes.begin(),
                                                                summary.exact_sizes.end()));
        bool dominated = true;
        for (std::size_t i = 0; i < summary.exact_sizes.size(); ++i)
            dominated = dominated && summary.heuristic_sizes[i] <= summary.exact_sizes[i];
        rep.add_check(make_check("heuristic_never_beats_oracle", dominated ? 1.0 : 0.0, "==", 1.0,
                                 dominated, true, ValueSource::Computed));
    }
    rep.add_check(make_check("max_vs_additive_threshold", summary.max_size, "<=",
                             summary.threshold_additive,
                             summary.max_size <= summary.threshold_additive, false,
                             ValueSource::Published));
    rep.add_check(make_check("max_vs_sqrtp_threshold", summary.max_size, "<=",
                             summary.threshold_sqrtp, summary.max_size <= summary.threshold_sqrtp,
                             false, ValueSource::Published));
    return emit(rep, go, elapsed_ms(t0));
}

int run_c4_certificate(const GlobalOptions& go, const GraphInput& gi, const std::string& sub_path,
                       double delta, double epsilon, double t) {
    Report rep;
    rep.command = "c4 certificate";
    rep.set_config("delta", delta);
    rep.set_config("epsilon", epsilon);
    rep.set_config("t", t);
    const auto t0 = std::chrono::steady_clock::now();
    const Graph host = load_graph(gi);
    Graph sub;
    if (sub_path.empty()) {
        sub = Graph(host.n());
        for (const auto& [u, v] : max_c4_free_subgraph_heuristic(host, go.seed).edges)
            sub.add_edge(u, v);
        rep.set_config("subgraph", std::string("heuristic"));
    } else {
        std::ifstream in(sub_path);
        if (!in.good()) throw InvalidConfigError("cannot open subgraph file " + sub_path);
        sub = Graph::read(in);
        rep.set_config("subgraph", sub_path);
    }
    const Certificate cert = build_certificate(host, sub, delta, epsilon, t, go.seed);
    const bool verified = verify_certificate(host, sub, cert);
    rep.set_output("y_size", static_cast<std::int64_t>(cert.y.size()));
    rep.set_output("sparsifier_edges", static_cast<std::int64_t>(cert.f.f.edge_count()));
    rep.set_output("containers", static_cast<std::int64_t>(cert.containers.size()));
    rep.set_output("fallback_split", cert.fallback_split);
    rep.add_check(make_check("verify_round_trip", verified ? 1.0 : 0.0, "==", 1.0, verified, true,
                             ValueSource::Exact));
    return emit(rep, go, elapsed_ms(t0));
}

int run_c4_blowup(const GlobalOptions& go, const GraphInput& gi, bool full,
                  const std::string& graph_out) {
    Report rep;
    rep.command = "c4 blowup";
    rep.set_config("full_matchings", full);
    const auto t0 = std::chrono::steady_clock::now();
    const Graph base = load_graph(gi);
    const BlowupGraph blow = doubled_matching_blowup(base, go.seed, full);
    rep.set_output("base_vertices", std::int64_t{base.n()});
    rep.set_output("result_vertices", std::int64_t{blow.result.n()});
    rep.set_output("result_edges", static_cast<std::int64_t>(blow.result.edge_count()));
    rep.add_check(make_check("result_c4_free", is_c4_free(blow.result) ? 1.0 : 0.0, "==", 1.0,
                             is_c4_free(blow.result), true, ValueSource::Computed));
    if (!graph_out.empty()) {
        std::ofstream out(graph_out);
        if (!out.good()) throw InvalidConfigError("cannot open graph file " + graph_out);
        blow.result.write(out);
        rep.set_output("graph_file", graph_out);
    }
    return emit(rep, go, elapsed_ms(t0));
}

int run_c4_overlap(const GlobalOptions& go, double pmin, double pmax, int steps) {
    Report rep;
    rep.command = "c4 overlap";
    rep.set_config("pmin", pmin);
    rep.set_config("pmax", pmax);
    rep.set_config("steps", std::int64_t{steps});
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i)
        grid.push_back(pmin + (pmax - pmin) * static_cast<double>(i) / std::max(1, steps - 1));
    const OverlapCurve curve = expected_overlap_curve(grid);
    rep.set_output("p", curve.p);
    rep.set_output("g", curve.g);
    rep.set_output("p0", curve.p0);
    rep.add_check(make_check("root_near_fifth", curve.p0, "~=", 0.2,
                             curve.p0 >= 0.15 && curve.p0 <= 0.25, true, ValueSource::Published));
    return emit(rep, go, elapsed_ms(t0));
}

int run_c4_regular(const GlobalOptions& go, int n, double p) {
    Report rep;
    rep.command = "c4 regular";
    rep.set_config("n", std::int64_t{n});
    rep.set_config("p", p);
    const auto t0 = std::chrono::steady_clock::now();
    const RegularThresholdReport report = regular_threshold(n, p);
    rep.set_output("threshold", report.threshold);
    std::vector<double> demand, supply;
    std::vector<std::int64_t> degrees;
    for (const auto& row : report.rows) {
        degrees.push_back(row.d);
        demand.push_back(row.edge_demand);
        supply.push_back(row.place_supply);
    }
    rep.set_output("d", degrees);
    rep.set_output("edge_demand", demand);
    rep.set_output("place_supply", supply);
    const double d_star = report.threshold;
    rep.add_check(make_check("crossing_identity", d_star * n, "==", p * n * n / d_star,
                             std::abs(d_star * n - p * n * n / d_star) <= 1e-9, true,
                             ValueSource::Exact));
    return emit(rep, go, elapsed_ms(t0));
}

int run_c4_excess(const GlobalOptions& go, const GraphInput& gi, double p) {
    Report rep;
    rep.command = "c4 excess";
    rep.set_config("p", p);
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = load_graph(gi);
    const VertexOrdering ord = min_degree_ordering(g);
    const ExcessReport report = excess_degree_report(g, ord, p);
    rep.set_output("index_set_size", static_cast<std::int64_t>(report.positions.size()));
    rep.set_output("excess_sum", report.excess_sum);
    rep.set_output("m_prime", static_cast<std::int64_t>(report.m_prime));
    rep.set_output("tail_bound", report.tail_bound);
    rep.add_check(make_check("tail_bound_is_probability", report.tail_bound, "<=", 1.0,
                             report.tail_bound <= 1.0, true, ValueSource::Exact));
    return emit(rep, go, elapsed_ms(t0));
}

int run_c4_chernoff(const GlobalOptions& go, std::int64_t k, std::int64_t m, double p) {
    Report rep;
    rep.command = "c4 chernoff";
    rep.set_config("k", k);
    rep.set_config("m", m);
    rep.set_config("p", p);
    const auto t0 = std::chrono::steady_clock::now();
    const double bound = chernoff_upper_tail(k, m, p);
    rep.set_output("tail_bound", bound);
    rep.add_check(make_check("bound_is_probability", bound, "<=", 1.0, bound <= 1.0, true,
                             ValueSource::Exact));
    return emit(rep, go, elapsed_ms(t0));
}

int run_c4_manyedges(const GlobalOptions& go, const GraphInput& gi, double delta, double gamma,
                     double c) {
    Report rep;
    rep.command = "c4 manyedges";
    rep.set_config("delta", delta);
    rep.set_config("gamma", gamma);
    rep.set_config("c", c);
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = load_graph(gi);
    const ManyEdgesAudit audit = manyedges_audit(g, delta, gamma, c);
    rep.set_output("e_xy", static_cast<std::int64_t>(audit.e_xy));
    rep.set_output("e_x", static_cast<std::int64_t>(audit.e_x));
    rep.set_output("e_y", static_cast<std::int64_t>(audit.e_y));
    rep.add_check(make_check("cross_edges_vs_threshold", static_cast<double>(audit.e_xy), ">",
                             audit.threshold, audit.ok, false, ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

// ---------------------------------------------------------------------------

int run_graph_ordering(const GlobalOptions& go, const GraphInput& gi,
                       const std::string& tiebreak_csv) {
    Report rep;
    rep.command = "graph ordering";
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = load_graph(gi);
    const VertexOrdering ord = min_degree_ordering(g, parse_int_list(tiebreak_csv));
    rep.set_output("order", std::vector<std::int64_t>(ord.order.begin(), ord.order.end()));
    rep.set_output("right_degrees",
                   std::vector<std::int64_t>(ord.right_degrees.begin(), ord.right_degrees.end()));
    long long sum = 0;
    for (int d : ord.right_degrees) sum += d;
    rep.add_check(make_check("right_degrees_sum_to_edges", static_cast<double>(sum), "==",
                             static_cast<double>(g.edge_count()), sum == g.edge_count(), true,
                             ValueSource::Exact));
    return emit(rep, go, elapsed_ms(t0));
}

int run_graph_extremal(const GlobalOptions& go, const GraphInput& gi) {
    Report rep;
    rep.command = "graph extremal";
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = load_graph(gi);
    const ExtremalSubgraph ex = max_c4_free_subgraph_exact(g);
    rep.set_output("size", std::int64_t{ex.size});
    std::vector<std::int64_t> flat;
    for (const auto& [u, v] : ex.edges) {
        flat.push_back(u);
        flat.push_back(v);
    }
    rep.set_output("edges_flat", flat);
    Graph h(g.n());
    for (const auto& [u, v] : ex.edges) h.add_edge(u, v);
    const double bound = 0.5 * std::pow(static_cast<double>(g.n()), 1.5) + g.n();
    rep.add_check(make_check("result_c4_free", is_c4_free(h) ? 1.0 : 0.0, "==", 1.0, is_c4_free(h),
                             true, ValueSource::Computed));
    rep.add_check(make_check("size_vs_extremal_bound", ex.size, "<=", bound, ex.size <= bound,
                             true, ValueSource::Published));
    return emit(rep, go, elapsed_ms(t0));
}

int run_demo_kkfree(const GlobalOptions& go, int n, int k) {
    Report rep;
    rep.command = "demo kkfree";
    rep.set_config("n", std::int64_t{n});
    rep.set_config("k", std::int64_t{k});
    const auto t0 = std::chrono::steady_clock::now();
    const KkFreeDemo demo = kkfree_demo(n, k);
    rep.set_output("count", demo.count.to_string());
    rep.set_output("turan", static_cast<std::int64_t>(demo.turan));
    rep.set_output("log2_ratio", demo.log2_ratio);
    rep.add_check(make_check("ratio_direction_band", demo.log2_ratio, "in(1,2.5)", 0.0,
                             demo.log2_ratio > 1.0 && demo.log2_ratio < 2.5, false,
                             ValueSource::Computed));
    return emit(rep, go, elapsed_ms(t0));
}

int run_constants_gamma(const GlobalOptions& go) {
    Report rep;
    rep.command = "constants gamma";
    const auto t0 = std::chrono::steady_clock::now();
    const ConstantsReport r = gamma_and_cstar();
    const double c_improvement = (3.0 - 2.0 * std::sqrt(2.0)) / 6.0;
    rep.set_output("gamma", r.gamma);
    rep.set_output("c_star", r.c_star);
    rep.set_output("c_improvement", c_improvement);
    rep.add_check(make_check("gamma_published", r.gamma, "~=", 1.081919,
                             std::abs(r.gamma - 1.081919) <= 1e-5, true, ValueSource::Published));
    rep.add_check(make_check("c_star_published", r.c_star, "~=", 0.49,
                             std::abs(r.c_star - 0.49) <= 0.01, true, ValueSource::Published));
    rep.add_check(make_check("c_improvement_value", c_improvement, "~=", 0.02860,
                             std::abs(c_improvement - 0.02860) <= 1e-5, true, ValueSource::Published));
    return emit(rep, go, elapsed_ms(t0));
}

int run_acceptance_cmd(const GlobalOptions& go, const std::string& suite) {
    if (suite != "fast" && suite != "full")
        throw InvalidConfigError("acceptance suite must be fast or full");
    Report rep;
    rep.command = "acceptance " + suite;
    const auto t0 = std::chrono::steady_clock::now();
    AcceptanceOptions options;
    options.full = suite == "full";
    options.workers = go.workers;
    const auto results = run_acceptance(options);
    print_acceptance(results, std::cerr, false);
    std::int64_t failures = 0;
    for (const auto& r : results) {
        rep.add_check(make_check("criterion_" + std::to_string(r.id), r.pass ? 1.0 : 0.0, "==",
                                 1.0, r.pass, true, ValueSource::Computed));
        if (!r.pass) ++failures;
    }
    rep.set_output("criteria", static_cast<std::int64_t>(results.size()));
    rep.set_output("failures", failures);
    return emit(rep, go, elapsed_ms(t0));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"containerlab: desk-scale experiments around independent-set containers,"
                 " C4-free graphs, and metric-space counting"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions go;
    app.add_option("--seed", go.seed, "root seed; per-task streams derive from it");
    app.add_option("--workers", go.workers, "worker threads (never changes results)");
    app.add_option("--format", go.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", go.out_path, "write the report to a file instead of stdout");
    app.add_flag("--no-timing", go.no_timing, "omit wall time for byte-identical replays");
    app.add_option("--cap", go.cap, "override the global enumeration budget");

    int result = 0;
    const auto defer = [&result, &go](std::function<int()> fn) {
        return [&result, &go, fn = std::move(fn)] {
            if (go.cap > 0) global_caps().enumeration_budget = go.cap;
            result = fn();
        };
    };

    // metric ------------------------------------------------------------
    auto* metric = app.add_subcommand("metric", "metric-space counting and audits");
    metric->require_subcommand(1);
    metric->fallthrough();
    {
        auto* cmd = metric->add_subcommand("count", "count metric colorings two ways");
        auto n = std::make_shared<int>(3);
        auto r = std::make_shared<int>(3);
        auto method = std::make_shared<std::string>("both");
        cmd->add_option("--n", *n, "points")->required();
        cmd->add_option("--r", *r, "colors")->required();
        cmd->add_option("--method", *method)->check(CLI::IsMember({"both", "brute", "hypergraph"}));
        cmd->callback(defer([&go, n, r, method] { return run_metric_count(go, *n, *r, *method); }));
    }
    {
        auto* cmd = metric->add_subcommand("hypergraph-stats", "exact co-degree statistics");
        auto n = std::make_shared<int>(6);
        auto r = std::make_shared<int>(3);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--r", *r)->required();
        cmd->callback(defer([&go, n, r] { return run_metric_stats(go, *n, *r); }));
    }
    {
        auto* cmd = metric->add_subcommand("local-criterion", "size bound for violation-free triples");
        auto r = std::make_shared<int>(4);
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto c = std::make_shared<std::string>();
        auto scan = std::make_shared<bool>(false);
        cmd->add_option("--r", *r)->required();
        cmd->add_option("--a", *a, "comma-separated colors");
        cmd->add_option("--b", *b);
        cmd->add_option("--c", *c);
        cmd->add_flag("--scan", *scan, "exhaust all nonempty triples");
        cmd->callback(defer([&go, r, a, b, c, scan] {
            if (!*scan && (a->empty() || b->empty() || c->empty()))
                throw InvalidConfigError("give --a --b --c or --scan");
            return run_metric_local(go, *r, *a, *b, *c, *scan);
        }));
    }
    {
        auto* cmd = metric->add_subcommand("supersaturation", "hyperedge count audit for large sets");
        auto n = std::make_shared<int>(6);
        auto r = std::make_shared<int>(3);
        auto eps = std::make_shared<double>(0.5);
        auto s_file = std::make_shared<std::string>();
        auto amn = std::make_shared<int>(-1);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--r", *r)->required();
        cmd->add_option("--epsilon", *eps)->required();
        cmd->add_option("--s-file", *s_file, "vertex ids, whitespace separated; default full set");
        cmd->add_option("--assert-min-n", *amn, "assert the odd-r bound from this n on");
        cmd->callback(defer([&go, n, r, eps, s_file, amn] {
            return run_metric_supersaturation(go, *n, *r, *eps, *s_file, *amn);
        }));
    }
    {
        auto* cmd = metric->add_subcommand("polytope", "Monte Carlo volume of the metric polytope");
        auto n = std::make_shared<int>(3);
        auto samples = std::make_shared<std::int64_t>(1000000);
        auto coord_min = std::make_shared<double>(0.0);
        auto delta = std::make_shared<double>(0.1);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--samples", *samples);
        cmd->add_option("--coord-min", *coord_min, "sampling floor per coordinate");
        cmd->add_option("--delta", *delta, "slack in the distant-n comparison bound");
        cmd->callback(defer([&go, n, samples, coord_min, delta] {
            return run_metric_polytope(go, *n, *samples, *coord_min, *delta);
        }));
    }
    {
        auto* cmd = metric->add_subcommand("params", "discrete parameter chain report");
        auto n = std::make_shared<int>(1000);
        auto r = std::make_shared<int>(5);
        auto delta = std::make_shared<double>(0.1);
        auto c = std::make_shared<int>(1);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--r", *r)->required();
        cmd->add_option("--delta", *delta);
        cmd->add_option("--c", *c);
        cmd->callback(defer([&go, n, r, delta, c] { return run_metric_params(go, *n, *r, *delta, *c); }));
    }
    {
        auto* cmd = metric->add_subcommand("chain", "continuous-setting parameter chain");
        auto n = std::make_shared<double>(1e6);
        auto delta = std::make_shared<double>(0.1);
        auto c = std::make_shared<int>(1);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--delta", *delta);
        cmd->add_option("--c", *c);
        cmd->callback(defer([&go, n, delta, c] { return run_metric_chain(go, *n, *delta, *c); }));
    }
    {
        auto* cmd = metric->add_subcommand("max-indep", "largest no-empty-column independent set");
        auto n = std::make_shared<int>(3);
        auto r = std::make_shared<int>(3);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--r", *r)->required();
        cmd->callback(defer([&go, n, r] { return run_metric_max_indep(go, *n, *r); }));
    }
    {
        auto* cmd = metric->add_subcommand("ceil", "ceiling superadditivity check");
        auto a = std::make_shared<double>(0.0);
        auto b = std::make_shared<double>(0.0);
        auto c = std::make_shared<double>(0.0);
        auto trials = std::make_shared<std::int64_t>(0);
        cmd->add_option("--a", *a);
        cmd->add_option("--b", *b);
        cmd->add_option("--c", *c);
        cmd->add_option("--trials", *trials, "run a randomized property sweep instead");
        cmd->callback(defer([&go, a, b, c, trials] { return run_metric_ceil(go, *a, *b, *c, *trials); }));
    }

    // containers ----------------------------------------------------------
    auto* containers = app.add_subcommand("containers", "fingerprint/container engine");
    containers->require_subcommand(1);
    containers->fallthrough();
    {
        auto* cmd = containers->add_subcommand("build", "container for one independent set");
        auto gi = std::make_shared<GraphInput>();
        auto set = std::make_shared<std::string>();
        auto stop = std::make_shared<int>(1);
        auto tiebreak = std::make_shared<std::string>();
        add_graph_options(cmd, *gi, true);
        cmd->add_option("--set", *set, "independent set, comma separated")->required();
        cmd->add_option("--stop", *stop, "stop size");
        cmd->add_option("--tiebreak", *tiebreak, "permutation, comma separated");
        cmd->callback(defer([&go, gi, set, stop, tiebreak] {
            return run_containers_build(go, *gi, *set, *stop, *tiebreak);
        }));
    }
    {
        auto* cmd = containers->add_subcommand("enumerate", "walk the whole decision tree");
        auto gi = std::make_shared<GraphInput>();
        auto stop = std::make_shared<int>(1);
        auto max_fp = std::make_shared<int>(-1);
        auto family_out = std::make_shared<std::string>();
        add_graph_options(cmd, *gi, true);
        cmd->add_option("--stop", *stop);
        cmd->add_option("--max-fp", *max_fp, "fingerprint length cap, default n");
        cmd->add_option("--family-out", *family_out, "write the family records to a file");
        cmd->callback(defer([&go, gi, stop, max_fp, family_out] {
            return run_containers_enumerate(go, *gi, *stop, *max_fp, *family_out);
        }));
    }
    {
        auto* cmd = containers->add_subcommand("coverage", "verify every independent set is covered");
        auto gi = std::make_shared<GraphInput>();
        auto stop = std::make_shared<int>(1);
        auto max_fp = std::make_shared<int>(-1);
        add_graph_options(cmd, *gi, true);
        cmd->add_option("--stop", *stop);
        cmd->add_option("--max-fp", *max_fp);
        cmd->callback(defer([&go, gi, stop, max_fp] {
            return run_containers_coverage(go, *gi, *stop, *max_fp);
        }));
    }
    {
        auto* cmd = containers->add_subcommand("right", "right-neighborhood containers with measure audit");
        auto gi = std::make_shared<GraphInput>();
        auto eps = std::make_shared<double>(0.2);
        add_graph_options(cmd, *gi);
        cmd->add_option("--epsilon", *eps);
        cmd->callback(defer([&go, gi, eps] { return run_containers_right(go, *gi, *eps); }));
    }
    {
        auto* cmd = containers->add_subcommand("classify", "win/large/huge/alive classification");
        auto gi = std::make_shared<GraphInput>();
        auto eps = std::make_shared<double>(0.001);
        add_graph_options(cmd, *gi);
        cmd->add_option("--epsilon", *eps);
        cmd->callback(defer([&go, gi, eps] { return run_containers_classify(go, *gi, *eps); }));
    }

    // c4 -------------------------------------------------------------------
    auto* c4 = app.add_subcommand("c4", "C4-free counting, experiments, certificates");
    c4->require_subcommand(1);
    c4->fallthrough();
    {
        auto* cmd = c4->add_subcommand("count", "labelled C4-free graphs");
        auto n = std::make_shared<int>(5);
        cmd->add_option("--n", *n)->required();
        cmd->callback(defer([&go, n] { return run_c4_count(go, *n); }));
    }
    {
        auto* cmd = c4->add_subcommand("random", "largest C4-free subgraph of G(n,p)");
        auto n = std::make_shared<int>(12);
        auto p = std::make_shared<double>(0.5);
        auto trials = std::make_shared<int>(10);
        auto mode = std::make_shared<std::string>("auto");
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--p", *p)->required();
        cmd->add_option("--trials", *trials);
        cmd->add_option("--mode", *mode)->check(CLI::IsMember({"auto", "exact", "heuristic"}));
        cmd->callback(defer([&go, n, p, trials, mode] {
            return run_c4_random(go, *n, *p, *trials, *mode);
        }));
    }
    {
        auto* cmd = c4->add_subcommand("certificate", "build and verify a subgraph certificate");
        auto gi = std::make_shared<GraphInput>();
        auto sub = std::make_shared<std::string>();
        auto delta = std::make_shared<double>(0.3);
        auto eps = std::make_shared<double>(0.25);
        auto t = std::make_shared<double>(2.0);
        add_graph_options(cmd, *gi);
        cmd->add_option("--sub", *sub, "subgraph file; default greedy C4-free subgraph of the host");
        cmd->add_option("--delta", *delta);
        cmd->add_option("--epsilon", *eps);
        cmd->add_option("--t", *t, "sparsifier keeps each edge with probability 1/t");
        cmd->callback(defer([&go, gi, sub, delta, eps, t] {
            return run_c4_certificate(go, *gi, *sub, *delta, *eps, *t);
        }));
    }
    {
        auto* cmd = c4->add_subcommand("blowup", "double vertices, matchings per edge");
        auto gi = std::make_shared<GraphInput>();
        auto full = std::make_shared<bool>(false);
        auto graph_out = std::make_shared<std::string>();
        add_graph_options(cmd, *gi);
        cmd->add_flag("--full", *full, "always install perfect matchings");
        cmd->add_option("--graph-out", *graph_out, "write the blown-up graph to a file");
        cmd->callback(defer([&go, gi, full, graph_out] {
            return run_c4_blowup(go, *gi, *full, *graph_out);
        }));
    }
    {
        auto* cmd = c4->add_subcommand("overlap", "expected-overlap advantage curve");
        auto pmin = std::make_shared<double>(0.02);
        auto pmax = std::make_shared<double>(0.6);
        auto steps = std::make_shared<int>(30);
        cmd->add_option("--pmin", *pmin);
        cmd->add_option("--pmax", *pmax);
        cmd->add_option("--steps", *steps);
        cmd->callback(defer([&go, pmin, pmax, steps] {
            return run_c4_overlap(go, *pmin, *pmax, *steps);
        }));
    }
    {
        auto* cmd = c4->add_subcommand("regular", "degree threshold table for regular subgraphs");
        auto n = std::make_shared<int>(100);
        auto p = std::make_shared<double>(0.5);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--p", *p)->required();
        cmd->callback(defer([&go, n, p] { return run_c4_regular(go, *n, *p); }));
    }
    {
        auto* cmd = c4->add_subcommand("excess", "excess right-degrees and the tail bound");
        auto gi = std::make_shared<GraphInput>();
        auto p = std::make_shared<double>(0.5);
        add_graph_options(cmd, *gi);
        cmd->add_option("--p", *p);
        cmd->callback(defer([&go, gi, p] { return run_c4_excess(go, *gi, *p); }));
    }
    {
        auto* cmd = c4->add_subcommand("chernoff", "relative-entropy upper tail value");
        auto k = std::make_shared<std::int64_t>(0);
        auto m = std::make_shared<std::int64_t>(0);
        auto p = std::make_shared<double>(0.5);
        cmd->add_option("--k", *k)->required();
        cmd->add_option("--m", *m)->required();
        cmd->add_option("--p", *p)->required();
        cmd->callback(defer([&go, k, m, p] { return run_c4_chernoff(go, *k, *m, *p); }));
    }
    {
        auto* cmd = c4->add_subcommand("manyedges", "cross edges of the min-degree split");
        auto gi = std::make_shared<GraphInput>();
        auto delta = std::make_shared<double>(0.2);
        auto gamma = std::make_shared<double>(0.3);
        auto c = std::make_shared<double>(0.1);
        add_graph_options(cmd, *gi);
        cmd->add_option("--delta", *delta);
        cmd->add_option("--gamma", *gamma);
        cmd->add_option("--c", *c);
        cmd->callback(defer([&go, gi, delta, gamma, c] {
            return run_c4_manyedges(go, *gi, *delta, *gamma, *c);
        }));
    }

    // graph ------------------------------------------------------------------
    auto* graph = app.add_subcommand("graph", "graph primitives and serialization");
    graph->require_subcommand(1);
    graph->fallthrough();
    {
        auto* cmd = graph->add_subcommand("square", "proper square to stdout");
        auto gi = std::make_shared<GraphInput>();
        add_graph_options(cmd, *gi);
        cmd->callback(defer([&go, gi] {
            emit_graph(proper_square(load_graph(*gi)), go);
            return 0;
        }));
    }
    {
        auto* cmd = graph->add_subcommand("ordering", "min-degree ordering and right-degrees");
        auto gi = std::make_shared<GraphInput>();
        auto tiebreak = std::make_shared<std::string>();
        add_graph_options(cmd, *gi);
        cmd->add_option("--tiebreak", *tiebreak);
        cmd->callback(defer([&go, gi, tiebreak] { return run_graph_ordering(go, *gi, *tiebreak); }));
    }
    {
        auto* cmd = graph->add_subcommand("extremal", "exact maximum C4-free subgraph");
        auto gi = std::make_shared<GraphInput>();
        add_graph_options(cmd, *gi);
        cmd->callback(defer([&go, gi] { return run_graph_extremal(go, *gi); }));
    }
    {
        auto* cmd = graph->add_subcommand("polarity", "orthogonality graph of PG(2,q) to stdout");
        auto q = std::make_shared<int>(3);
        cmd->add_option("--q", *q)->required();
        cmd->callback(defer([&go, q] {
            emit_graph(polarity_graph(*q), go);
            return 0;
        }));
    }
    {
        auto* cmd = graph->add_subcommand("random", "G(n,p) sample to stdout");
        auto n = std::make_shared<int>(12);
        auto p = std::make_shared<double>(0.5);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--p", *p)->required();
        cmd->callback(defer([&go, n, p] {
            emit_graph(random_graph(*n, *p, go.seed), go);
            return 0;
        }));
    }

    // demo / constants / acceptance -------------------------------------------
    auto* demo = app.add_subcommand("demo", "desk-scale demonstrations");
    demo->require_subcommand(1);
    demo->fallthrough();
    {
        auto* cmd = demo->add_subcommand("kkfree", "count K_k-free graphs against the Turan number");
        auto n = std::make_shared<int>(5);
        auto k = std::make_shared<int>(3);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--k", *k)->required();
        cmd->callback(defer([&go, n, k] { return run_demo_kkfree(go, *n, *k); }));
    }
    auto* constants = app.add_subcommand("constants", "numeric constants");
    constants->require_subcommand(1);
    constants->fallthrough();
    {
        auto* cmd = constants->add_subcommand("gamma", "entropy-ratio maximum and friends");
        cmd->callback(defer([&go] { return run_constants_gamma(go); }));
    }
    {
        auto* cmd = app.add_subcommand("acceptance", "run the acceptance battery");
        auto suite = std::make_shared<std::string>();
        cmd->add_option("suite", *suite, "fast or full")->required();
        cmd->callback(defer([&go, suite] { return run_acceptance_cmd(go, *suite); }));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const InvalidConfigError& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return result;
}
