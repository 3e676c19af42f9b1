#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "goldgraph/primegraph.hpp"
#include "goldgraph/primes.hpp"

namespace goldgraph::theorems {

// Witness for the Sylow pi-set characterizations: the prime q whose
// centralizer (resp. normalizer) gains primes at the step 2n-1 -> 2n.
struct SylowWitness {
    std::uint64_t q = 0;
    std::vector<std::uint64_t> new_primes;
};

// Per-even-number record of the seven equivalent characterizations of
// "2n is a sum of two distinct odd primes":
//   1  the decompositions themselves
//   2  Gamma(A_{2n-1}) proper subgraph of Gamma(A_{2n})
//   3  edge difference >= 1
//   4  same as 3, restricted to the case where both graphs are connected
//   5  some Sylow centralizer pi-set grows
//   6  some Sylow normalizer pi-set grows
//   7  biprimary space dimension strictly grows
struct CharacterizationReport {
    std::uint64_t n2 = 0;
    primes::GoldbachPairSet part1_pairs;
    bool part2_proper = false;
    std::uint64_t part3_diff = 0;
    bool part4_applicable = false; // both graphs connected
    std::uint64_t part4_diff = 0;
    std::optional<SylowWitness> part5_witness;
    std::optional<SylowWitness> part6_witness;
    // (dim U(A_{2n-1}), dim U(A_{2n})); empty when part 7 was skipped.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> part7_dims;
    bool all_equivalent = false;
};

struct VerifyOptions {
    // Part 7 is skipped (marker: empty part7_dims) above this degree.
    std::uint64_t part7_degree_limit = 100;
};

// n2 even, >= 8, <= s.limit(). Every part is computed along its own route;
// all_equivalent compares their truth values (part 4 only when applicable).
CharacterizationReport verify_characterizations(std::uint64_t n2, const primes::PrimeSieve& s,
                                                const VerifyOptions& opt = {});

nlohmann::ordered_json report_to_json(const CharacterizationReport& r);

// Sum over odd primes 3 <= p < n of pi(2n-p) - pi(2n-1-p); equals the edge
// difference |E(A_{2n}) - E(A_{2n-1})|. Requires n >= 4, s.limit() >= 2n.
std::uint64_t edge_diff_formula(std::uint32_t n, const primes::PrimeSieve& s);

// Edge counts at the high vertices n < q <= 2n-3 of Gamma(A_{2n}):
// formula_count is |pi(A_{2n-q})| when corrected, pi(2n-q) when not (the
// uncorrected form overcounts by one exactly when 2n-q = 3); graph_count is
// the true incidence read off the built graph.
struct IncidenceRow {
    std::uint64_t q = 0;
    std::uint64_t formula_count = 0;
    std::uint64_t graph_count = 0;
};

std::vector<IncidenceRow> incident_edge_counts(std::uint32_t n, bool corrected,
                                               const primes::PrimeSieve& s);

// Decompositions of p-1 and p+1 for a prime p >= 11. Both are guaranteed
// nonempty; an empty half raises theorem_violation with a JSON report.
struct PrimeNeighborPairs {
    primes::GoldbachPairSet below; // p - 1
    primes::GoldbachPairSet above; // p + 1
};

PrimeNeighborPairs prime_neighbor_goldbach(std::uint64_t p, const primes::PrimeSieve& s);

// The p+1 half alone, valid from p >= 7 (8 = 3 + 5 anchors it).
primes::GoldbachPairSet goldbach_pairs_above_prime(std::uint64_t p, const primes::PrimeSieve& s);

// If Gamma(A_{2n}) = Gamma(A_{2n-1}) then Gamma(A_{2n}) = Gamma(A_{2n-2});
// true when the implication holds at this n (vacuously if the premise
// fails). n >= 6.
bool iso_step_check(std::uint32_t n, const primes::PrimeSieve& s);

// If the odd step 2n -> 2n+1 gains an edge, then 2n - 3 is an odd prime
// > 3. n >= 4. (Properness is read on edges; the vertex 2n+1 appearing when
// 2n+1 is prime does not trigger the premise.)
bool odd_gain_check(std::uint32_t n, const primes::PrimeSieve& s);

// { n in [from, to] : |E(A_{2n+1}) - E(A_{2n})| = 0 }, the degrees whose
// consecutive odd-step graphs are edge-identical. from >= 4.
std::vector<std::uint32_t> recognizability_scan(std::uint32_t from, std::uint32_t to,
                                                const primes::PrimeSieve& s);

// A pair of consecutive even Goldbach numbers (2m-2, 2m) with
// (12n-7)/7 < 2m-2 and 2m <= 2n, both verified by goldbach_pairs. Searches
// downward from 2n; n >= 5. Raises theorem_violation if no witness exists.
std::pair<std::uint64_t, std::uint64_t> consecutive_goldbach_witness(
    std::uint32_t n, const primes::PrimeSieve& s);

// Edge differences d(n) = |E(A_{2n}) - E(A_{2n-1})| over a range of n.
struct DiffTableRow {
    std::uint32_t n = 0;
    std::uint64_t d = 0;
};

std::vector<DiffTableRow> edge_diff_table(std::uint32_t from, std::uint32_t to,
                                          const primes::PrimeSieve& s);

// CSV with header "n,d".
std::string table_to_csv(const std::vector<DiffTableRow>& rows);

} // namespace goldgraph::theorems
