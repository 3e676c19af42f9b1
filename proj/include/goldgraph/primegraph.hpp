#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "goldgraph/primes.hpp"

namespace goldgraph::primegraph {

// Element-order prime graph of A_n: vertices are the primes dividing n!/2,
// an edge {p,q} whenever A_n contains an element of order pq. Edges are kept
// sorted with p < q; equality is structural.
struct PrimeGraph {
    std::uint32_t degree = 0;
    std::vector<std::uint64_t> vertices;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

    bool operator==(const PrimeGraph&) const = default;

    bool has_edge(std::uint64_t p, std::uint64_t q) const;
    std::uint64_t degree_of(std::uint64_t v) const; // number of incident edges
};

// Vertex/edge gain between two degrees. delta() asserts containment, so a
// violation here is an internal-consistency failure of a builder, never data.
struct GraphDelta {
    std::uint32_t larger_degree = 0;
    std::uint32_t smaller_degree = 0;
    std::vector<std::uint64_t> new_vertices;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> new_edges;
    std::uint64_t edge_diff_count = 0;

    bool proper() const noexcept { return !new_vertices.empty() || !new_edges.empty(); }
};

// Closed-form builder: odd edge {p,q} iff p + q <= n, edge {2,p} iff
// p + 4 <= n. Valid for n >= 5; for 5 <= n <= 7 (below the criterion's
// proven range) the result is cross-checked against the spectrum builder.
// Requires s.limit() >= n.
PrimeGraph build_by_criterion(std::uint32_t n, const primes::PrimeSieve& s);

// Definition-level builder: edge {p,q} iff pq is an element order of A_n.
// Bounded by the partition enumeration ceiling.
PrimeGraph build_by_spectrum(std::uint32_t n);

// Vertex and edge gain of larger over smaller; throws std::logic_error if
// containment fails.
GraphDelta delta(const PrimeGraph& larger, const PrimeGraph& smaller);

// Structural equality (vertex and edge sets) regardless of which degree the
// graphs were built for.
bool same_underlying_graph(const PrimeGraph& a, const PrimeGraph& b);

// Connected components as sorted vertex sets, ordered by smallest member.
// Isolated vertices are singleton components.
std::vector<std::vector<std::uint64_t>> components(const PrimeGraph& g);

// One undirected `graph` block; vertices as node names, each edge once.
std::string to_dot(const PrimeGraph& g);

// {"degree": n, "vertices": [...], "edges": [[p,q], ...]}
nlohmann::ordered_json to_json(const PrimeGraph& g);

} // namespace goldgraph::primegraph
