#include "goldgraph/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "goldgraph/errors.hpp"
#include "goldgraph/structure.hpp"

namespace goldgraph::theorems {

namespace {

nlohmann::ordered_json pairs_to_json(const primes::GoldbachPairSet& ps) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [p, q] : ps.pairs) arr.push_back({p, q});
    return arr;
}

nlohmann::ordered_json witness_to_json(const std::optional<SylowWitness>& w) {
    if (!w) return nullptr;
    nlohmann::ordered_json j;
    j["q"] = w->q;
    j["new_primes"] = w->new_primes;
    return j;
}

void check_prime(const primes::PrimeSieve& s, std::uint64_t p, const char* who) {
    if (p > s.limit() || !s.is_prime(p))
        throw std::invalid_argument(std::string(who) + ": argument must be prime");
}

} // namespace

CharacterizationReport verify_characterizations(std::uint64_t n2, const primes::PrimeSieve& s,
                                                const VerifyOptions& opt) {
    if (n2 % 2 != 0 || n2 < 8)
        throw std::invalid_argument("verify_characterizations: even number >= 8 required");
    if (n2 > s.limit())
        throw std::out_of_range("verify_characterizations: sieve smaller than target");

    CharacterizationReport r;
    r.n2 = n2;
    r.part1_pairs = primes::goldbach_pairs(s, n2);

    const auto big = primegraph::build_by_criterion(static_cast<std::uint32_t>(n2), s);
    const auto small = primegraph::build_by_criterion(static_cast<std::uint32_t>(n2 - 1), s);
    const auto d = primegraph::delta(big, small);
    r.part2_proper = d.proper();
    r.part3_diff = d.edge_diff_count;

    r.part4_applicable = primegraph::components(big).size() == 1 &&
                         primegraph::components(small).size() == 1;
    r.part4_diff = r.part3_diff;

    const std::uint64_t half = n2 / 2;
    for (std::uint64_t q = half + 1; q + 3 <= n2; ++q) {
        if (q % 2 == 0 || !s.is_prime(q)) continue;
        const auto pd = structure::sylow_pi_delta(static_cast<std::uint32_t>(n2), q, s);
        if (!r.part5_witness && !pd.centralizer_new_primes.empty())
            r.part5_witness = SylowWitness{q, pd.centralizer_new_primes};
        if (!r.part6_witness && !pd.normalizer_new_primes.empty())
            r.part6_witness = SylowWitness{q, pd.normalizer_new_primes};
        if (r.part5_witness && r.part6_witness) break;
    }

    if (n2 <= opt.part7_degree_limit)
        r.part7_dims = std::make_pair(structure::dim_u(static_cast<std::uint32_t>(n2 - 1)),
                                      structure::dim_u(static_cast<std::uint32_t>(n2)));

    const bool b1 = !r.part1_pairs.empty();
    bool agree = b1 == r.part2_proper && b1 == (r.part3_diff >= 1) &&
                 b1 == r.part5_witness.has_value() && b1 == r.part6_witness.has_value();
    if (r.part4_applicable) agree = agree && b1 == (r.part4_diff >= 1);
    if (r.part7_dims) agree = agree && b1 == (r.part7_dims->second > r.part7_dims->first);
    r.all_equivalent = agree;
    return r;
}

nlohmann::ordered_json report_to_json(const CharacterizationReport& r) {
    nlohmann::ordered_json j;
    j["n2"] = r.n2;
    j["part1_pairs"] = pairs_to_json(r.part1_pairs);
    j["part2_proper"] = r.part2_proper;
    j["part3_diff"] = r.part3_diff;
    j["part4_applicable"] = r.part4_applicable;
    j["part4_diff"] = r.part4_diff;
    j["part5_witness"] = witness_to_json(r.part5_witness);
    j["part6_witness"] = witness_to_json(r.part6_witness);
    if (r.part7_dims)
        j["part7_dims"] = {r.part7_dims->first, r.part7_dims->second};
    else
        j["part7_dims"] = nullptr;
    j["all_equivalent"] = r.all_equivalent;
    return j;
}

std::uint64_t edge_diff_formula(std::uint32_t n, const primes::PrimeSieve& s) {
    if (n < 4) throw std::invalid_argument("edge_diff_formula: n >= 4 required");
    if (2ULL * n > s.limit())
        throw std::out_of_range("edge_diff_formula: sieve smaller than 2n");
    std::uint64_t sum = 0;
    for (std::uint64_t p = 3; p < n; p += 2) {
        if (!s.is_prime(p)) continue;
        sum += s.prime_count(2ULL * n - p) - s.prime_count(2ULL * n - 1 - p);
    }
    return sum;
}

std::vector<IncidenceRow> incident_edge_counts(std::uint32_t n, bool corrected,
                                               const primes::PrimeSieve& s) {
    if (n < 4) throw std::invalid_argument("incident_edge_counts: n >= 4 required");
    if (2ULL * n > s.limit())
        throw std::out_of_range("incident_edge_counts: sieve smaller than 2n");

    const auto graph = primegraph::build_by_criterion(2 * n, s);
    std::vector<IncidenceRow> rows;
    for (std::uint64_t q = n + 1; q + 3 <= 2ULL * n; ++q) {
        if (q % 2 == 0 || !s.is_prime(q)) continue;
        IncidenceRow row;
        row.q = q;
        row.formula_count = corrected ? structure::pi_of_alternating(2ULL * n - q).size()
                                      : s.prime_count(2ULL * n - q);
        row.graph_count = graph.degree_of(q);
        rows.push_back(row);
    }
    return rows;
}

primes::GoldbachPairSet goldbach_pairs_above_prime(std::uint64_t p, const primes::PrimeSieve& s) {
    check_prime(s, p, "goldbach_pairs_above_prime");
    if (p < 7)
        throw std::invalid_argument("goldbach_pairs_above_prime: requires p >= 7");
    auto pairs = primes::goldbach_pairs(s, p + 1);
    if (pairs.empty()) {
        nlohmann::ordered_json rep;
        rep["claim"] = "p+1 is a sum of two distinct odd primes";
        rep["p"] = p;
        rep["target"] = p + 1;
        throw theorem_violation("no decomposition found for p+1", rep.dump());
    }
    return pairs;
}

PrimeNeighborPairs prime_neighbor_goldbach(std::uint64_t p, const primes::PrimeSieve& s) {
    check_prime(s, p, "prime_neighbor_goldbach");
    if (p < 11)
        throw std::invalid_argument("prime_neighbor_goldbach: requires p >= 11");

    PrimeNeighborPairs out;
    out.below = primes::goldbach_pairs(s, p - 1);
    if (out.below.empty()) {
        nlohmann::ordered_json rep;
        rep["claim"] = "p-1 is a sum of two distinct odd primes";
        rep["p"] = p;
        rep["target"] = p - 1;
        throw theorem_violation("no decomposition found for p-1", rep.dump());
    }
    out.above = goldbach_pairs_above_prime(p, s);
    return out;
}

bool iso_step_check(std::uint32_t n, const primes::PrimeSieve& s) {
    if (n < 6) throw std::invalid_argument("iso_step_check: n >= 6 required");
    const auto g2n = primegraph::build_by_criterion(2 * n, s);
    const auto g2n1 = primegraph::build_by_criterion(2 * n - 1, s);
    if (!primegraph::same_underlying_graph(g2n, g2n1)) return true;
    return primegraph::same_underlying_graph(g2n, primegraph::build_by_criterion(2 * n - 2, s));
}

bool odd_gain_check(std::uint32_t n, const primes::PrimeSieve& s) {
    if (n < 4) throw std::invalid_argument("odd_gain_check: n >= 4 required");
    const auto d = primegraph::delta(primegraph::build_by_criterion(2 * n + 1, s),
                                     primegraph::build_by_criterion(2 * n, s));
    if (d.new_edges.empty()) return true;
    const std::uint64_t p = 2ULL * n - 3;
    return p > 3 && s.is_prime(p);
}

std::vector<std::uint32_t> recognizability_scan(std::uint32_t from, std::uint32_t to,
                                                const primes::PrimeSieve& s) {
    if (from < 4) throw std::invalid_argument("recognizability_scan: from >= 4 required");
    std::vector<std::uint32_t> zero_diff;
    for (std::uint32_t n = from; n <= to; ++n) {
        const auto d = primegraph::delta(primegraph::build_by_criterion(2 * n + 1, s),
                                         primegraph::build_by_criterion(2 * n, s));
        if (d.edge_diff_count == 0) zero_diff.push_back(n);
    }
    return zero_diff;
}

std::pair<std::uint64_t, std::uint64_t> consecutive_goldbach_witness(
    std::uint32_t n, const primes::PrimeSieve& s) {
    if (n < 5) throw std::invalid_argument("consecutive_goldbach_witness: n >= 5 required");
    if (2ULL * n > s.limit())
        throw std::out_of_range("consecutive_goldbach_witness: sieve smaller than 2n");

    for (std::uint64_t m2 = 2ULL * n; m2 >= 10; m2 -= 2) {
        const std::uint64_t low = m2 - 2;
        if (7 * low <= 12ULL * n - 7) break; // interval exhausted going down
        if (!primes::goldbach_pairs(s, low).empty() &&
            !primes::goldbach_pairs(s, m2).empty())
            return {low, m2};
    }
    nlohmann::ordered_json rep;
    rep["claim"] = "two consecutive even Goldbach numbers in ((12n-7)/7, 2n]";
    rep["n"] = n;
    throw theorem_violation("no consecutive Goldbach pair in the interval", rep.dump());
}

std::vector<DiffTableRow> edge_diff_table(std::uint32_t from, std::uint32_t to,
                                          const primes::PrimeSieve& s) {
    if (from < 4) throw std::invalid_argument("edge_diff_table: from >= 4 required");
    if (to < from) throw std::invalid_argument("edge_diff_table: empty range");
    std::vector<DiffTableRow> rows;
    rows.reserve(to - from + 1);
    for (std::uint32_t n = from; n <= to; ++n) {
        const auto d = primegraph::delta(primegraph::build_by_criterion(2 * n, s),
                                         primegraph::build_by_criterion(2 * n - 1, s));
        rows.push_back(DiffTableRow{n, d.edge_diff_count});
    }
    return rows;
}

std::string table_to_csv(const std::vector<DiffTableRow>& rows) {
    std::ostringstream out;
    out << "n,d\n";
    for (const auto& row : rows) out << row.n << ',' << row.d << '\n';
    return out.str();
}

} // namespace goldgraph::theorems
