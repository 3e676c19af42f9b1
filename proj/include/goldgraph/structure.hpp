#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "goldgraph/permoracle.hpp"
#include "goldgraph/primes.hpp"

namespace goldgraph::structure {

// Primes dividing |A_m| = m!/2: empty for m <= 2, {3} for m = 3, all primes
// <= m for m >= 4. This differs from pi(m) exactly at m = 3, which is why
// downstream counts use this and not the plain prime-counting function.
std::vector<std::uint64_t> pi_of_alternating(std::uint64_t m);

// Closed-form centralizer/normalizer data for a Sylow q-subgroup Q of A_n,
// q odd prime, n/2 < q <= n-2, n >= 8:
//   |C| = q (n-q)!/2,  |N| = (q-1) q (n-q)!/2,  N/C cyclic of order q-1,
//   pi(C) = {q} u pi(A_{n-q}),  pi(N) = {q} u pi(q-1) u pi(A_{n-q}).
struct SubgroupProfile {
    std::uint32_t degree = 0;
    std::uint64_t q = 0;
    std::uint64_t centralizer_order = 0;
    std::uint64_t normalizer_order = 0;
    std::vector<std::uint64_t> centralizer_primes;
    std::vector<std::uint64_t> normalizer_primes;
    std::pair<std::uint64_t, std::uint64_t> frobenius_part; // (|Q|, |complement|) = (q, q-1)
};

// Throws std::domain_error outside the stated range; std::overflow_error if
// the orders do not fit in 64 bits (n - q > 20). Prime sets never overflow.
SubgroupProfile subgroup_profile(std::uint32_t n, std::uint64_t q, const primes::PrimeSieve& s);

// New primes gained by the Sylow-q centralizer and normalizer when the
// ambient degree steps 2n-1 -> 2n. Both sets equal
// pi(A_{2n-q}) - pi(A_{2n-1-q}); they are computed separately and the
// equality is an invariant, not an assumption.
struct PiSetDelta {
    std::uint32_t even_degree = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> centralizer_new_primes;
    std::vector<std::uint64_t> normalizer_new_primes;
};

// n2 = 2n >= 8 even; q odd prime with n < q <= 2n-1.
PiSetDelta sylow_pi_delta(std::uint32_t n2, std::uint64_t q, const primes::PrimeSieve& s);

// Dimension of the biprimary space of A_n: the number of conjugacy classes
// whose element order is a product of two distinct odd primes.
std::uint64_t dim_u(std::uint32_t n);

// Dimension of the subspace spanned by A_n class sums of biprimary classes
// meeting A_{n-1} (cycle type has a part equal to 1); n2 even.
std::uint64_t dim_u_tilde(std::uint32_t n2);

// Verifies that the Frobenius group Q x| C_{q-1} inside N_{A_n}(Q) has no
// element of order pq for any odd prime p != q. The subgroup is built by
// closure from the q-cycle and a mixed-support complement generator
// sigma * (q, q+1) (0-based), sigma the multiplication-by-primitive-root map
// on the q-set; its order q(q-1) and membership in the normalizer are
// asserted. Requires n <= 9 (10 with the permoracle opt-in via the snapshot
// overload) and n/2 < q <= n-2.
bool frobenius_has_no_pq_element(std::uint32_t n, std::uint64_t q);
bool frobenius_has_no_pq_element(const permoracle::GroupSnapshot& g, std::uint64_t q);

} // namespace goldgraph::structure
