#include "goldgraph/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

namespace goldgraph::partitions {

namespace {

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 3; c <= n; c += 2) {
        bool prime = true;
        for (std::uint64_t d = 3; d * d <= c; d += 2) {
            if (c % d == 0) { prime = false; break; }
        }
        if (prime) out.push_back(c);
    }
    return out;
}

// Counts A_n classes with element order p*q, split classes double. Every
// qualifying cycle type has parts in {1, p, q, pq} (all odd, hence the
// permutation is even automatically) with multiplicities (a, b, c, d)
// solving a + bp + cq + d*pq = n, b + d >= 1, c + d >= 1. A type splits
// exactly when all multiplicities are <= 1.
std::uint64_t count_for_pair(std::uint64_t n, std::uint64_t p, std::uint64_t q,
                             bool require_fixed_point) {
    const std::uint64_t pq = p * q;
    std::uint64_t total = 0;
    for (std::uint64_t d = 0; d * pq <= n; ++d) {
        for (std::uint64_t c = 0; d * pq + c * q <= n; ++c) {
            if (c + d == 0) continue;
            std::uint64_t rem = n - d * pq - c * q;
            if (require_fixed_point) {
                if (rem == 0) continue;
                rem -= 1; // one part reserved as a fixed point
            }
            const std::uint64_t b_min = d >= 1 ? 0 : 1;
            const std::uint64_t b_max = rem / p;
            if (b_max >= b_min) total += b_max - b_min + 1;
        }
    }
    // split classes: a, b, c, d all in {0, 1}
    for (std::uint64_t b = 0; b <= 1; ++b) {
        for (std::uint64_t c = 0; c <= 1; ++c) {
            for (std::uint64_t d = 0; d <= 1; ++d) {
                if (b + d < 1 || c + d < 1) continue;
                const std::uint64_t used = b * p + c * q + d * pq;
                if (used > n) continue;
                const std::uint64_t a = n - used;
                if (require_fixed_point ? a == 1 : a <= 1) ++total;
            }
        }
    }
    return total;
}

std::uint64_t biprimary_count(std::uint32_t n, bool require_fixed_point) {
    if (n == 0) throw std::invalid_argument("biprimary_class_count: degree must be >= 1");
    if (n > 100000)
        throw resource_limit_error("biprimary_class_count: degree exceeds counting bound");
    const auto ps = odd_primes_up_to(n);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (ps[i] + ps[j] > n) break;
            total += count_for_pair(n, ps[i], ps[j], require_fixed_point);
        }
    }
    return total;
}

} // namespace

CycleType CycleType::from_parts(std::uint32_t degree, std::vector<std::uint32_t> parts) {
    std::uint64_t sum = 0;
    for (auto p : parts) {
        if (p == 0) throw std::invalid_argument("CycleType: zero part");
        sum += p;
    }
    if (sum != degree) throw std::invalid_argument("CycleType: parts must sum to the degree");
    std::sort(parts.begin(), parts.end(), std::greater<>());

    CycleType t;
    t.degree = degree;
    t.parts = std::move(parts);
    std::uint32_t even_parts = 0;
    bool distinct_odd = true;
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        t.order = std::lcm(t.order, static_cast<std::uint64_t>(t.parts[i]));
        even_parts += t.parts[i] % 2 == 0;
        if (t.parts[i] % 2 == 0 || (i > 0 && t.parts[i] == t.parts[i - 1])) distinct_odd = false;
    }
    t.is_even = even_parts % 2 == 0;
    t.splits_in_an = t.is_even && distinct_odd;
    return t;
}

bool Spectrum::contains(std::uint64_t m) const {
    return std::binary_search(orders.begin(), orders.end(), m);
}

Spectrum spectrum(std::uint32_t n, GroupKind group) {
    std::set<std::uint64_t> acc;
    const auto filter = group == GroupKind::alternating
                            ? std::optional<Parity>(Parity::even)
                            : std::nullopt;
    enumerate_cycle_types(n, filter, [&](const CycleTypeView& t) { acc.insert(t.order); });

    Spectrum s;
    s.degree = n;
    s.group = group;
    s.orders.assign(acc.begin(), acc.end());
    return s;
}

std::uint64_t biprimary_class_count(std::uint32_t n) {
    return biprimary_count(n, false);
}

std::uint64_t biprimary_class_count_with_fixed_point(std::uint32_t n) {
    return biprimary_count(n, true);
}

} // namespace goldgraph::partitions
