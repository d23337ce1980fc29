#include "containerlab/container.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "containerlab/constants.hpp"
#include "containerlab/errors.hpp"
#include "containerlab/rng.hpp"

namespace clab {

namespace {

std::vector<int> rank_of(std::span<const int> tiebreak, int n) {
    std::vector<int> perm;
    if (tiebreak.empty()) {
        perm = identity_permutation(n);
        tiebreak = perm;
    }
    if (static_cast<int>(tiebreak.size()) != n)
        throw InvalidArgumentError("tiebreak permutation has wrong length");
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    for (int pos = 0; pos < n; ++pos) {
        const int v = tiebreak[static_cast<std::size_t>(pos)];
        if (v < 0 || v >= n || rank[static_cast<std::size_t>(v)] != -1)
            throw InvalidArgumentError("tiebreak is not a permutation of [n]");
        rank[static_cast<std::size_t>(v)] = pos;
    }
    return rank;
}

int greedy_pivot(const Graph& square, const Bits128& available, const std::vector<int>& rank) {
    int best = -1, best_deg = -1;
    available.for_each([&](int v) {
        const int d = (square.neighbors(v) & available).count();
        if (d > best_deg ||
            (d == best_deg && rank[static_cast<std::size_t>(v)] < rank[static_cast<std::size_t>(best)])) {
            best = v;
            best_deg = d;
        }
    });
    return best;
}

bool independent_in(const Graph& square, const Bits128& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if ((square.neighbors(v) & s).any()) ok = false;
    });
    return ok;
}

}  // namespace

GreedyContainerResult greedy_container(const Graph& square, Bits128 independent_set,
                      std::span<const int> tiebreak, int stop_size, Bits128 universe) {
    const int n = square.n();
    if (stop_size < 0 || stop_size >= n)
        throw InvalidArgumentError("stop_size must be in [0, n)");
    universe &= square.vertex_mask();
    if (!universe.contains(independent_set))
        throw InvalidArgumentError("independent set must lie inside the universe");
    if (!independent_in(square, independent_set))
        throw NotIndependentError("input set spans an edge of the square graph");
    const std::vector<int> rank = rank_of(tiebreak, n);

    GreedyContainerResult out;
    Bits128 available = universe;
    while (available.count() > stop_size) {
        const int v = greedy_pivot(square, available, rank);
        const int before = available.count();
        if (independent_set.test(v)) {
            out.fingerprint.vertices.push_back(v);
            available.reset(v);
            available -= square.neighbors(v);
        } else {
            available.reset(v);
        }
        out.removal_counts.push_back(before - available.count());
    }
    out.container = available;
    for (int v : out.fingerprint.vertices) out.container.set(v);
    return out;
}

Bits128 container_for_fingerprint(const Graph& square, const Fingerprint& t,
                                  std::span<const int> tiebreak, int stop_size,
                                  Bits128 universe) {
    const int n = square.n();
    if (stop_size < 0 || stop_size >= n)
        throw InvalidArgumentError("stop_size must be in [0, n)");
    universe &= square.vertex_mask();
    const std::vector<int> rank = rank_of(tiebreak, n);

    Bits128 available = universe;
    std::size_t consumed = 0;
    while (available.count() > stop_size) {
        const int v = greedy_pivot(square, available, rank);
        if (consumed < t.vertices.size() && t.vertices[consumed] == v) {
            ++consumed;
            available.reset(v);
            available -= square.neighbors(v);
        } else {
            available.reset(v);
        }
    }
    if (consumed != t.vertices.size())
        throw NotReplayableError("fingerprint entry is never the greedy pivot");
    Bits128 container = available;
    for (int v : t.vertices) container.set(v);
    return container;
}

namespace {

struct EnumerationState {
    const Graph& square;
    const std::vector<int>& rank;
    int stop_size;
    int max_fingerprint;
    std::uint64_t budget;
    std::uint64_t visited = 0;
    ContainerFamily* family;

    void walk(Bits128 available, std::vector<int>& fingerprint) {
        if (++visited > budget)
            throw TooLargeError("container enumeration exceeded the node budget");
        while (available.count() > stop_size) {
            const int v = greedy_pivot(square, available, rank);
            // member branch: v joins the fingerprint, neighborhood leaves
            if (static_cast<int>(fingerprint.size()) >= max_fingerprint)
                throw FingerprintOverflowError(
                    "an independent set needs a fingerprint longer than max_fingerprint");
            Bits128 member = available;
            member.reset(v);
            member -= square.neighbors(v);
            fingerprint.push_back(v);
            walk(member, fingerprint);
            fingerprint.pop_back();
            // non-member branch continues in place
            available.reset(v);
        }
        Bits128 container = available;
        for (int v : fingerprint) container.set(v);
        family->members.emplace(fingerprint, container);
    }
};

}  // namespace

ContainerFamily enumerate_all_containers(const Graph& square, std::span<const int> tiebreak,
                                         int stop_size, int max_fingerprint, Bits128 universe) {
    const int n = square.n();
    universe &= square.vertex_mask();
    if (universe.count() > global_caps().exhaustive_container_vertices)
        throw TooLargeError("exhaustive container enumeration capped at " +
                            std::to_string(global_caps().exhaustive_container_vertices) +
                            " vertices");
    if (stop_size < 0 || stop_size >= n)
        throw InvalidArgumentError("stop_size must be in [0, n)");
    const std::vector<int> rank = rank_of(tiebreak, n);

    ContainerFamily family;
    family.graph_hash = square.hash();
    family.tiebreak.assign(tiebreak.begin(), tiebreak.end());
    family.stop_size = stop_size;

    EnumerationState st{square, rank, stop_size, max_fingerprint,
                        global_caps().enumeration_budget, 0, &family};
    std::vector<int> fingerprint;
    st.walk(universe, fingerprint);
    return family;
}

void ContainerFamily::write(std::ostream& out) const {
    out << "# containerlab container family\n";
    out << "# graph_hash=" << std::hex << graph_hash << std::dec << " stop_size=" << stop_size
        << " tiebreak=";
    if (tiebreak.empty()) {
        out << "identity";
    } else {
        for (std::size_t i = 0; i < tiebreak.size(); ++i)
            out << (i ? "," : "") << tiebreak[i];
    }
    out << "\n";
    for (const auto& [t, c] : members) {
        out << "T: ";
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
        out << " | C:";
        c.for_each([&](int v) { out << " " << v; });
        out << "\n";
    }
}

SparsifierResult sparsify(const Graph& g, double t, std::uint64_t seed) {
    if (t < 1.0) throw InvalidArgumentError("sparsifier needs t >= 1 (keep probability 1/t)");
    SparsifierResult out{Graph(g.n()), t, seed};
    SplitMix64 rng(seed);
    for (const auto& [u, v] : g.edges()) {
        if (rng.bernoulli(1.0 / t)) out.f.add_edge(u, v);
    }
    return out;
}

RightContainerSet build_right_containers(const Graph& g, double epsilon,
                                         std::span<const int> tiebreak) {
    if (!is_c4_free(g)) throw NotC4FreeError("right containers require a C4-free graph");
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw InvalidArgumentError("epsilon must be in (0,1)");
    const int n = g.n();

    RightContainerSet out;
    out.epsilon = epsilon;
    out.ordering = min_degree_ordering(g, tiebreak);
    out.audited_prefix = static_cast<int>(std::floor((1.0 - epsilon) * n));

    for (int pos = 0; pos < out.audited_prefix; ++pos) {
        const int v = out.ordering.order[static_cast<std::size_t>(pos)];
        const int m = n - pos;  // suffix including v itself
        RightContainerEntry entry;
        entry.position = pos;
        entry.vertex = v;
        entry.suffix_size = m;
        entry.right_degree = out.ordering.right_degrees[static_cast<std::size_t>(pos)];

        Bits128 suffix;
        for (int j = pos; j < n; ++j) suffix.set(out.ordering.order[static_cast<std::size_t>(j)]);
        const Graph residual = g.restricted_to(suffix);
        const Bits128 right_nbhd = residual.neighbors(v);

        // small right-degree: few possible neighborhoods, store the trivial
        // container (log factors invert below m=2, treat as small there too)
        const double logm = std::log(static_cast<double>(m));
        const bool small = (logm <= 0.0) ||
                           (static_cast<double>(entry.right_degree) < std::sqrt(static_cast<double>(m)) / (logm * logm));
        if (small) {
            entry.shortcut = true;
            entry.container = right_nbhd;
        } else {
            // run the engine on the square of the residual with v removed;
            // C4-freeness makes the right-neighborhood independent there
            Bits128 future = suffix;
            future.reset(v);
            const Graph square = proper_square(residual.restricted_to(future));
            const int stop = std::min(stop_preset_three_sqrt(m), future.count() > 0 ? future.count() - 1 : 0);
            GreedyContainerResult built = greedy_container(square, right_nbhd, tiebreak, std::max(stop, 0), future);
            entry.fingerprint = built.fingerprint;
            entry.container = built.container;

            // extend the fingerprint while the degree measure is too big
            const auto measure = [&](const Bits128& c) {
                long long s = 0;
                c.for_each([&](int u) { s += residual.degree(u); });
                return s;
            };
            const double bound = (1.0 + epsilon * epsilon) * static_cast<double>(m);
            Bits128 available = entry.container;
            for (int u : entry.fingerprint.vertices) available.reset(u);
            const std::vector<int> rank = rank_of(tiebreak, n);
            while (static_cast<double>(measure(entry.container)) > bound && available.any()) {
                const int pivot = greedy_pivot(square, available, rank);
                if (right_nbhd.test(pivot)) {
                    entry.fingerprint.vertices.push_back(pivot);
                    available.reset(pivot);
                    available -= square.neighbors(pivot);
                } else {
                    available.reset(pivot);
                }
                entry.container = available;
                for (int u : entry.fingerprint.vertices) entry.container.set(u);
            }
        }

        long long mu = 0;
        entry.container.for_each([&](int u) { mu += residual.degree(u); });
        entry.degree_measure = mu;
        entry.measure_bound = (1.0 + epsilon * epsilon) * static_cast<double>(m);
        entry.measure_ok = static_cast<double>(mu) <= entry.measure_bound;
        out.entries.push_back(std::move(entry));
    }
    return out;
}

VertexClassification classify_vertices(const Graph& g, const VertexOrdering& ordering,
                                       const RightContainerSet& rc, double epsilon) {
    const int n = g.n();
    if (static_cast<int>(ordering.order.size()) != n)
        throw InvalidArgumentError("ordering size does not match the graph");

    VertexClassification out;
    out.epsilon = epsilon;
    out.c_star = maximize_entropy_ratio().x;
    const double sqrt_eps = std::sqrt(epsilon);
    const double sqrt_n = std::sqrt(static_cast<double>(n));

    out.win.assign(static_cast<std::size_t>(n), false);
    std::vector<const RightContainerEntry*> entry_at(static_cast<std::size_t>(n), nullptr);
    for (const auto& e : rc.entries) entry_at[static_cast<std::size_t>(e.position)] = &e;

    for (int pos = 0; pos < n; ++pos) {
        const double m = static_cast<double>(n - pos);
        const double d_star = ordering.right_degrees[static_cast<std::size_t>(pos)];
        bool win = std::abs(d_star - out.c_star * std::sqrt(m)) > epsilon * std::sqrt(m);
        if (const auto* e = entry_at[static_cast<std::size_t>(pos)]) {
            if (e->container.count() <= (1.0 - epsilon * epsilon) * std::sqrt(m) / out.c_star)
                win = true;
        }
        out.win[static_cast<std::size_t>(pos)] = win;
    }

    for (int v = 0; v < n; ++v) {
        const double d = g.degree(v);
        if (d > (1.0 + 30.0 * sqrt_eps) * out.c_star * sqrt_n) out.large.set(v);
        if (d > sqrt_n) out.huge.set(v);
        if (d > (1.0 + 10.0 * sqrt_eps) * out.c_star * sqrt_n) out.alive1.set(v);
    }
    out.nesting_ok = out.large.contains(out.huge) && out.alive1.contains(out.large);

    // per-container audits against the i-alive counts
    for (const auto& e : rc.entries) {
        const int pos = e.position;
        const double m = static_cast<double>(n - pos);
        Bits128 suffix;
        for (int j = pos; j < n; ++j) suffix.set(ordering.order[static_cast<std::size_t>(j)]);
        const Graph residual = g.restricted_to(suffix);

        Bits128 alive;
        suffix.for_each([&](int u) {
            if (residual.degree(u) > (1.0 + 10.0 * sqrt_eps) * out.c_star * std::sqrt(m)) alive.set(u);
        });

        AliveAudit audit;
        audit.position = pos;
        audit.alive_in_container = (e.container & alive).count();
        audit.fewlarge_applies = !out.win[static_cast<std::size_t>(pos)];
        audit.fewlarge_bound = std::sqrt(epsilon * m);
        audit.fewlarge_ok = !audit.fewlarge_applies ||
                            static_cast<double>(audit.alive_in_container) <= audit.fewlarge_bound;
        audit.global_bound = 10.0 * sqrt_n;
        audit.global_ok = static_cast<double>(audit.alive_in_container) <= audit.global_bound;
        out.audits.push_back(audit);
    }
    return out;
}

int stop_preset_n35(int m) {
    return static_cast<int>(std::ceil(std::pow(static_cast<double>(m), 0.6)));
}

int stop_preset_three_sqrt(int m) {
    return static_cast<int>(std::ceil(3.0 * std::sqrt(static_cast<double>(m))));
}

int stop_preset_b_sqrt(double b, int n) {
    return static_cast<int>(std::ceil((1.0 + 3.0 * b) * std::sqrt(static_cast<double>(n))));
}

}  // namespace clab
