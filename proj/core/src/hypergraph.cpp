#include "containerlab/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "containerlab/caps.hpp"
#include "containerlab/errors.hpp"

namespace clab {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw InvalidArgumentError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Hypergraph3::Hypergraph3(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0 || vertex_count > global_caps().hypergraph_vertices)
        throw TooLargeError("hypergraph vertex count out of range");
}

void Hypergraph3::add_edge(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    std::array<std::uint32_t, 3> e{a, b, c};
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2])
        throw InvalidArgumentError("hyperedge vertices must be distinct");
    if (e[2] >= static_cast<std::uint32_t>(n_))
        throw InvalidArgumentError("hyperedge vertex out of range");
    edges_.push_back(e);
    dirty_ = true;
}

void Hypergraph3::normalize() const {
    if (!dirty_) return;
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    dirty_ = false;
}

bool Hypergraph3::has_edge(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    normalize();
    std::array<std::uint32_t, 3> e{a, b, c};
    std::sort(e.begin(), e.end());
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

void Hypergraph3::write(std::ostream& out) const {
    normalize();
    out << "N=" << n_ << "\n";
    for (const auto& e : edges_) out << e[0] << " " << e[1] << " " << e[2] << "\n";
}

Hypergraph3 Hypergraph3::read(std::istream& in) {
    std::string header;
    if (!(in >> header) || header.rfind("N=", 0) != 0)
        throw InvalidArgumentError("hypergraph stream must start with N=<int>");
    Hypergraph3 h(std::stoi(header.substr(2)));
    std::uint32_t a = 0, b = 0, c = 0;
    while (in >> a >> b >> c) h.add_edge(a, b, c);
    return h;
}

DegreeStats degree_stats(const Hypergraph3& h) {
    if (h.vertex_count() == 0) throw EmptyVertexSetError("degree_stats needs at least one vertex");
    DegreeStats s;
    std::vector<long long> deg(static_cast<std::size_t>(h.vertex_count()), 0);
    std::unordered_map<std::uint64_t, long long> pair_deg;
    pair_deg.reserve(h.edge_count() * 3);
    const auto key = [&](std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(h.vertex_count()) + b;
    };
    for (const auto& e : h.edges()) {
        for (int i = 0; i < 3; ++i) ++deg[e[static_cast<std::size_t>(i)]];
        ++pair_deg[key(e[0], e[1])];
        ++pair_deg[key(e[0], e[2])];
        ++pair_deg[key(e[1], e[2])];
    }
    for (long long d : deg) s.delta1 = std::max(s.delta1, d);
    for (const auto& [k, d] : pair_deg) {
        (void)k;
        s.delta2 = std::max(s.delta2, d);
    }
    s.delta3 = h.edge_count() > 0 ? 1 : 0;  // edges are deduplicated
    s.dbar = Rational(3 * static_cast<long long>(h.edge_count()), h.vertex_count());
    return s;
}

double delta_hp(const DegreeStats& stats, double p) {
    if (p <= 0.0 || p > 1.0) throw InvalidArgumentError("p must be in (0,1]");
    const double dbar = stats.dbar.value();
    if (dbar <= 0.0) throw ZeroAverageDegreeError("delta_hp needs at least one edge");
    return 4.0 * static_cast<double>(stats.delta2) / (dbar * p) +
           2.0 * static_cast<double>(stats.delta3) / (dbar * p * p);
}

double delta_hp(const Hypergraph3& h, double p) { return delta_hp(degree_stats(h), p); }

ContainerHypotheses hypotheses_check(const Hypergraph3& h, double p, double alpha, int c) {
    if (alpha <= 0.0 || alpha >= 1.0) throw InvalidArgumentError("alpha must be in (0,1)");
    if (c < 1) throw InvalidArgumentError("c must be a positive integer");
    ContainerHypotheses out;
    out.p = p;
    out.alpha = alpha;
    out.c = c;
    out.delta_hp = delta_hp(h, p);
    out.p_ok = p <= 1.0 / (729.0 * static_cast<double>(c));
    out.delta_ok = out.delta_hp <= alpha / (27.0 * static_cast<double>(c));
    out.ok = out.p_ok && out.delta_ok;
    out.container_log_bound = 19683.0 * static_cast<double>(c) * (1.0 + std::log(1.0 / alpha)) *
                              static_cast<double>(h.vertex_count()) * p * std::log(1.0 / p);
    return out;
}

namespace {

std::vector<std::uint64_t> as_bitset(int n, std::span<const std::uint32_t> s) {
    std::vector<std::uint64_t> bits(static_cast<std::size_t>((n + 63) / 64), 0);
    for (std::uint32_t v : s) {
        if (v >= static_cast<std::uint32_t>(n)) throw InvalidArgumentError("vertex out of range");
        bits[v >> 6] |= 1ULL << (v & 63);
    }
    return bits;
}

}  // namespace

long long edges_within(const Hypergraph3& h, std::span<const std::uint32_t> s) {
    const auto bits = as_bitset(h.vertex_count(), s);
    const auto in = [&](std::uint32_t v) { return (bits[v >> 6] >> (v & 63)) & 1ULL; };
    long long count = 0;
    for (const auto& e : h.edges()) {
        if (in(e[0]) && in(e[1]) && in(e[2])) ++count;
    }
    return count;
}

bool is_independent(const Hypergraph3& h, std::span<const std::uint32_t> s) {
    const auto bits = as_bitset(h.vertex_count(), s);
    const auto in = [&](std::uint32_t v) { return (bits[v >> 6] >> (v & 63)) & 1ULL; };
    for (const auto& e : h.edges()) {
        if (in(e[0]) && in(e[1]) && in(e[2])) return false;
    }
    return true;
}

}  // namespace clab
