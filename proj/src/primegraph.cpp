#include "goldgraph/primegraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "goldgraph/partitions.hpp"

namespace goldgraph::primegraph {

namespace {

// pi(A_n) as a vertex set: {} for n <= 2, {3} for n = 3, all primes <= n
// for n >= 4 (2 survives the division by two once n >= 4).
std::vector<std::uint64_t> alternating_vertex_set(std::uint32_t n) {
    if (n <= 2) return {};
    if (n == 3) return {3};
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 2; c <= n; ++c) {
        bool prime = c >= 2;
        for (std::uint64_t d = 2; d * d <= c; ++d)
            if (c % d == 0) { prime = false; break; }
        if (prime) out.push_back(c);
    }
    return out;
}

} // namespace

bool PrimeGraph::has_edge(std::uint64_t p, std::uint64_t q) const {
    if (p > q) std::swap(p, q);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(p, q));
}

std::uint64_t PrimeGraph::degree_of(std::uint64_t v) const {
    std::uint64_t count = 0;
    for (const auto& [a, b] : edges) count += (a == v || b == v);
    return count;
}

PrimeGraph build_by_criterion(std::uint32_t n, const primes::PrimeSieve& s) {
    if (n < 5) throw std::domain_error("build_by_criterion: requires degree >= 5");
    if (s.limit() < n) throw std::out_of_range("build_by_criterion: sieve smaller than degree");

    PrimeGraph g;
    g.degree = n;
    for (std::uint64_t c = 2; c <= n; ++c)
        if (s.is_prime(c)) g.vertices.push_back(c);

    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            const std::uint64_t p = g.vertices[i];
            const std::uint64_t q = g.vertices[j];
            const bool edge = (p == 2) ? (q + 4 <= n) : (p + q <= n);
            if (edge) g.edges.emplace_back(p, q);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());

    // The closed-form criterion is proven for n >= 8; below that, insist on
    // agreement with the definition-level builder.
    if (n < 8 && !(g == build_by_spectrum(n)))
        throw std::logic_error("build_by_criterion: mismatch with spectrum builder below degree 8");
    return g;
}

PrimeGraph build_by_spectrum(std::uint32_t n) {
    const auto spec = partitions::spectrum(n, partitions::GroupKind::alternating);

    PrimeGraph g;
    g.degree = n;
    g.vertices = alternating_vertex_set(n);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            if (spec.contains(g.vertices[i] * g.vertices[j]))
                g.edges.emplace_back(g.vertices[i], g.vertices[j]);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool same_underlying_graph(const PrimeGraph& a, const PrimeGraph& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
}

GraphDelta delta(const PrimeGraph& larger, const PrimeGraph& smaller) {
    if (smaller.degree >= larger.degree)
        throw std::invalid_argument("delta: smaller graph must have smaller degree");
    if (!std::includes(larger.vertices.begin(), larger.vertices.end(),
                       smaller.vertices.begin(), smaller.vertices.end()) ||
        !std::includes(larger.edges.begin(), larger.edges.end(),
                       smaller.edges.begin(), smaller.edges.end()))
        throw std::logic_error("delta: containment violated, a builder is broken");

    GraphDelta d;
    d.larger_degree = larger.degree;
    d.smaller_degree = smaller.degree;
    std::set_difference(larger.vertices.begin(), larger.vertices.end(),
                        smaller.vertices.begin(), smaller.vertices.end(),
                        std::back_inserter(d.new_vertices));
    std::set_difference(larger.edges.begin(), larger.edges.end(),
                        smaller.edges.begin(), smaller.edges.end(),
                        std::back_inserter(d.new_edges));
    d.edge_diff_count = d.new_edges.size();
    return d;
}

std::vector<std::vector<std::uint64_t>> components(const PrimeGraph& g) {
    std::map<std::uint64_t, std::vector<std::uint64_t>> adj;
    for (auto v : g.vertices) adj[v];
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    std::vector<std::vector<std::uint64_t>> comps;
    std::map<std::uint64_t, bool> seen;
    for (auto v : g.vertices) {
        if (seen[v]) continue;
        std::vector<std::uint64_t> comp;
        std::vector<std::uint64_t> stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (auto w : adj[u]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::string to_dot(const PrimeGraph& g) {
    std::ostringstream out;
    out << "graph A" << g.degree << " {\n";
    for (auto v : g.vertices) out << "  " << v << ";\n";
    for (const auto& [a, b] : g.edges) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json to_json(const PrimeGraph& g) {
    nlohmann::ordered_json j;
    j["degree"] = g.degree;
    j["vertices"] = g.vertices;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    return j;
}

} // namespace goldgraph::primegraph
