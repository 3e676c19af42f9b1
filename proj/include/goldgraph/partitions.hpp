#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "goldgraph/errors.hpp"

namespace goldgraph::partitions {

// Hard ceiling for the generic partition stream; p(80) ~ 1.58e7.
inline constexpr std::uint32_t kMaxEnumerationDegree = 80;

enum class Parity { even, odd };
enum class GroupKind { alternating, symmetric };

// A cycle type of degree n: the multiset of cycle lengths of a permutation,
// fixed points included as parts of size 1. Parts are kept non-increasing.
struct CycleType {
    std::uint32_t degree = 0;
    std::vector<std::uint32_t> parts;
    std::uint64_t order = 1;      // lcm of parts
    bool is_even = false;         // (degree - #parts) even
    bool splits_in_an = false;    // all parts odd and pairwise distinct

    // Validates that parts sum to degree; sorts them non-increasing.
    static CycleType from_parts(std::uint32_t degree, std::vector<std::uint32_t> parts);
};

// Borrowed view handed to enumeration visitors; parts live in the
// enumerator's work buffer and are only valid during the visit.
struct CycleTypeView {
    std::uint32_t degree;
    std::span<const std::uint32_t> parts;
    std::uint64_t order;
    bool is_even;
    bool splits_in_an;

    CycleType to_owned() const {
        return CycleType{degree, {parts.begin(), parts.end()}, order, is_even, splits_in_an};
    }
};

namespace detail {

template <typename Visitor>
void enumerate_rec(std::uint32_t remaining, std::uint32_t max_part,
                   std::vector<std::uint32_t>& parts, std::vector<std::uint64_t>& lcms,
                   std::uint32_t& even_parts, std::uint32_t& split_violations,
                   std::uint32_t degree, const std::optional<Parity>& filter,
                   Visitor& visit) {
    if (remaining == 0) {
        const bool even = (even_parts % 2) == 0;
        if (filter && ((*filter == Parity::even) != even)) return;
        visit(CycleTypeView{degree, std::span<const std::uint32_t>(parts),
                            lcms.back(), even, even && split_violations == 0});
        return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        const bool viol = (part % 2 == 0) || (!parts.empty() && part == parts.back());
        parts.push_back(part);
        lcms.push_back(std::lcm(lcms.back(), static_cast<std::uint64_t>(part)));
        even_parts += part % 2 == 0;
        split_violations += viol;
        enumerate_rec(remaining - part, part, parts, lcms, even_parts,
                      split_violations, degree, filter, visit);
        split_violations -= viol;
        even_parts -= part % 2 == 0;
        lcms.pop_back();
        parts.pop_back();
    }
}

} // namespace detail

// Streams every partition of n exactly once, largest-part-first canonical
// order, annotated as a cycle type. With Parity::even the stream is exactly
// the cycle types realized in A_n; with Parity::odd, those of S_n \ A_n.
template <typename Visitor>
void enumerate_cycle_types(std::uint32_t n, std::optional<Parity> parity_filter,
                           Visitor&& visit) {
    if (n == 0) throw std::invalid_argument("enumerate_cycle_types: degree must be >= 1");
    if (n > kMaxEnumerationDegree)
        throw resource_limit_error("enumerate_cycle_types: degree exceeds enumeration bound 80");
    std::vector<std::uint32_t> parts;
    parts.reserve(n);
    std::vector<std::uint64_t> lcms{1};
    lcms.reserve(n + 1);
    std::uint32_t even_parts = 0;
    std::uint32_t split_violations = 0;
    detail::enumerate_rec(n, n, parts, lcms, even_parts, split_violations, n,
                          parity_filter, visit);
}

// The set of element orders of A_n or S_n, sorted and duplicate-free.
struct Spectrum {
    std::uint32_t degree = 0;
    GroupKind group = GroupKind::alternating;
    std::vector<std::uint64_t> orders;

    bool contains(std::uint64_t m) const;
};

Spectrum spectrum(std::uint32_t n, GroupKind group);

// Number of A_n conjugacy classes whose element order is a product of two
// distinct odd primes; split classes count as 2. Counted per prime pair over
// part multiplicities (all qualifying parts lie in {1, p, q, pq}), so this
// scales far beyond the generic stream bound.
std::uint64_t biprimary_class_count(std::uint32_t n);

// Same count restricted to classes whose cycle type contains a part equal
// to 1, i.e. the A_n classes meeting the natural A_{n-1}.
std::uint64_t biprimary_class_count_with_fixed_point(std::uint32_t n);

} // namespace goldgraph::partitions
