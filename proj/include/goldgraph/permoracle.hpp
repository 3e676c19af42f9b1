#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "goldgraph/errors.hpp"

namespace goldgraph::permoracle {

// Brute-force engine ceiling. |A_10| = 1,814,400 is minutes of pairwise
// scans, so degree 10 sits behind an explicit opt-in.
inline constexpr std::uint32_t kMaxDegree = 10;
inline constexpr std::uint32_t kDefaultDegreeCeiling = 9;

// Permutation on symbols 0..degree-1, stored as a fixed-width image array.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(std::uint32_t degree);
    // Validates the images form a bijection on 0..degree-1.
    static Permutation from_images(std::span<const std::uint8_t> images);
    // Cycle through the listed symbols (in order), everything else fixed.
    static Permutation from_cycle(std::uint32_t degree, std::span<const std::uint8_t> symbols);
    // The canonical q-cycle (0 1 ... q-1) inside degree n.
    static Permutation canonical_q_cycle(std::uint32_t degree, std::uint32_t q);

    std::uint32_t degree() const noexcept { return degree_; }
    std::uint8_t operator()(std::uint8_t i) const { return images_[i]; }

    Permutation compose(const Permutation& other) const;  // (*this) after other
    Permutation inverse() const;
    Permutation conjugated_by(const Permutation& g) const; // g * (*this) * g^-1

    bool is_even() const;
    std::uint64_t order() const;
    std::vector<std::uint32_t> cycle_lengths() const; // non-increasing

    bool operator==(const Permutation&) const = default;
    std::strong_ordering operator<=>(const Permutation&) const = default;

private:
    std::uint8_t degree_ = 0;
    std::array<std::uint8_t, kMaxDegree> images_{};
};

// A_n materialized: every even permutation, with element orders and
// conjugacy class ids. Classes are cycle types except where a type splits,
// resolved by an explicit conjugation sweep. Immutable once built.
struct GroupSnapshot {
    std::uint32_t degree = 0;
    std::vector<Permutation> elements;    // sorted by image array
    std::vector<std::uint32_t> orders;    // parallel to elements
    std::vector<std::uint32_t> class_ids; // parallel to elements
    std::uint32_t class_count = 0;

    std::optional<std::uint32_t> index_of(const Permutation& x) const;
    bool contains(const Permutation& x) const { return index_of(x).has_value(); }
};

// 2 <= n <= 10; n = 10 requires allow_degree_10.
GroupSnapshot enumerate_group(std::uint32_t n, bool allow_degree_10 = false);

// |C_{A_n}(x)| by a full commuting scan. x must lie in the snapshot.
std::uint64_t centralizer_order(const GroupSnapshot& g, const Permutation& x);
std::vector<std::uint32_t> centralizer_indices(const GroupSnapshot& g, const Permutation& x);

// |N_{A_n}(Q)| for Q = <(0 1 ... q-1)>, by brute-force g^-1 Q g = Q tests.
// Requires q odd prime with n/2 < q <= n (Q is then cyclic of order q).
std::uint64_t sylow_normalizer_order(const GroupSnapshot& g, std::uint32_t q);
std::vector<std::uint32_t> sylow_normalizer_indices(const GroupSnapshot& g, std::uint32_t q);

// True iff some element (optionally restricted to the given element indices)
// has order exactly m.
bool has_element_of_order(const GroupSnapshot& g, std::uint64_t m);
bool has_element_of_order(const GroupSnapshot& g, std::uint64_t m,
                          std::span<const std::uint32_t> within);

} // namespace goldgraph::permoracle
