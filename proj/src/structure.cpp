#include "goldgraph/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "goldgraph/partitions.hpp"

namespace goldgraph::structure {

namespace {

bool trial_is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

bool is_odd_prime(std::uint64_t q) { return q % 2 == 1 && trial_is_prime(q); }

// distinct prime factors, ascending
std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

std::vector<std::uint64_t> sorted_union(std::vector<std::uint64_t> a,
                                        const std::vector<std::uint64_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

// |A_m| convention: the trivial group below degree 3, m!/2 from there.
std::uint64_t alternating_order(std::uint64_t m) {
    if (m <= 2) return 1;
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= m; ++i) f *= i;
    return f / 2;
}

} // namespace

std::vector<std::uint64_t> pi_of_alternating(std::uint64_t m) {
    if (m <= 2) return {};
    if (m == 3) return {3};
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 2; c <= m; ++c)
        if (trial_is_prime(c)) out.push_back(c);
    return out;
}

SubgroupProfile subgroup_profile(std::uint32_t n, std::uint64_t q, const primes::PrimeSieve& s) {
    if (n < 8) throw std::domain_error("subgroup_profile: requires degree >= 8");
    if (!is_odd_prime(q) || 2 * q <= n || q > n - 2)
        throw std::domain_error("subgroup_profile: q must be an odd prime with n/2 < q <= n-2");
    if (n - q > 20)
        throw std::overflow_error("subgroup_profile: orders exceed 64 bits");
    if (s.limit() < q) throw std::out_of_range("subgroup_profile: sieve smaller than q");

    SubgroupProfile p;
    p.degree = n;
    p.q = q;
    p.centralizer_order = q * alternating_order(n - q);
    p.normalizer_order = (q - 1) * p.centralizer_order;
    p.centralizer_primes = sorted_union({q}, pi_of_alternating(n - q));
    p.normalizer_primes = sorted_union(p.centralizer_primes, prime_factors(q - 1));
    p.frobenius_part = {q, q - 1};
    return p;
}

PiSetDelta sylow_pi_delta(std::uint32_t n2, std::uint64_t q, const primes::PrimeSieve& s) {
    if (n2 < 8 || n2 % 2 != 0)
        throw std::domain_error("sylow_pi_delta: even degree >= 8 required");
    if (!is_odd_prime(q) || 2 * q <= n2 || q >= n2)
        throw std::domain_error("sylow_pi_delta: q must be an odd prime with n < q <= 2n-1");
    if (s.limit() < n2) throw std::out_of_range("sylow_pi_delta: sieve smaller than degree");

    // pi(C_{A_m}(Q)) = {q} u pi(A_{m-q}); pi(N) adds pi(q-1) on both sides,
    // so both deltas reduce to the same alternating-tail difference. They
    // are still formed from the full sets, not from the reduced identity.
    const auto cent_large = sorted_union({q}, pi_of_alternating(n2 - q));
    const auto cent_small = sorted_union({q}, pi_of_alternating(n2 - 1 - q));
    const auto qm1 = prime_factors(q - 1);
    const auto norm_large = sorted_union(cent_large, qm1);
    const auto norm_small = sorted_union(cent_small, qm1);

    PiSetDelta d;
    d.even_degree = n2;
    d.q = q;
    std::set_difference(cent_large.begin(), cent_large.end(), cent_small.begin(),
                        cent_small.end(), std::back_inserter(d.centralizer_new_primes));
    std::set_difference(norm_large.begin(), norm_large.end(), norm_small.begin(),
                        norm_small.end(), std::back_inserter(d.normalizer_new_primes));
    return d;
}

std::uint64_t dim_u(std::uint32_t n) {
    return partitions::biprimary_class_count(n);
}

std::uint64_t dim_u_tilde(std::uint32_t n2) {
    if (n2 % 2 != 0) throw std::domain_error("dim_u_tilde: even degree required");
    return partitions::biprimary_class_count_with_fixed_point(n2);
}

namespace {

std::uint64_t smallest_primitive_root(std::uint64_t q) {
    for (std::uint64_t r = 2; r < q; ++r) {
        std::uint64_t acc = 1;
        std::uint64_t ord = 0;
        do {
            acc = acc * r % q;
            ++ord;
        } while (acc != 1);
        if (ord == q - 1) return r;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

bool order_is_odd_biprimary(std::uint64_t m) {
    if (m % 2 == 0) return false;
    const auto f = prime_factors(m);
    if (f.size() != 2) return false;
    return m == f[0] * f[1]; // squarefree, exactly two odd primes
}

} // namespace

bool frobenius_has_no_pq_element(const permoracle::GroupSnapshot& g, std::uint64_t q) {
    const std::uint32_t n = g.degree;
    if (!is_odd_prime(q) || 2 * q <= n || q > n - 2)
        throw std::domain_error(
            "frobenius_has_no_pq_element: q must be an odd prime with n/2 < q <= n-2");

    // x = (0 1 ... q-1); sigma multiplies the Z_q labelling by a primitive
    // root, so sigma x sigma^-1 = x^r; the trailing transposition makes the
    // complement generator even without touching the q-set action.
    const auto x = permoracle::Permutation::canonical_q_cycle(n, q);
    const std::uint64_t r = smallest_primitive_root(q);
    std::vector<std::uint8_t> images(n);
    for (std::uint32_t i = 0; i < n; ++i) images[i] = static_cast<std::uint8_t>(i);
    for (std::uint64_t z = 0; z < q; ++z) images[z] = static_cast<std::uint8_t>(z * r % q);
    std::swap(images[q], images[q + 1]);
    const auto gen = permoracle::Permutation::from_images(images);

    // subgroup closure of {x, gen}
    std::vector<permoracle::Permutation> h{permoracle::Permutation::identity(n)};
    std::vector<permoracle::Permutation> frontier = h;
    while (!frontier.empty()) {
        std::vector<permoracle::Permutation> next;
        for (const auto& e : frontier) {
            for (const auto& s : {x, gen}) {
                const auto prod = e.compose(s);
                auto it = std::lower_bound(h.begin(), h.end(), prod);
                if (it == h.end() || !(*it == prod)) {
                    h.insert(it, prod);
                    next.push_back(prod);
                }
            }
        }
        frontier = std::move(next);
    }

    if (h.size() != q * (q - 1))
        throw std::logic_error("frobenius_has_no_pq_element: closure has unexpected order");
    const auto normalizer = permoracle::sylow_normalizer_indices(g, static_cast<std::uint32_t>(q));
    for (const auto& e : h) {
        const auto idx = g.index_of(e);
        if (!idx || !std::binary_search(normalizer.begin(), normalizer.end(), *idx))
            throw std::logic_error("frobenius_has_no_pq_element: closure left the normalizer");
        if (order_is_odd_biprimary(e.order())) return false;
    }
    return true;
}

bool frobenius_has_no_pq_element(std::uint32_t n, std::uint64_t q) {
    if (n > permoracle::kDefaultDegreeCeiling)
        throw resource_limit_error("frobenius_has_no_pq_element: degree exceeds oracle ceiling");
    const auto g = permoracle::enumerate_group(n);
    return frobenius_has_no_pq_element(g, q);
}

} // namespace goldgraph::structure
