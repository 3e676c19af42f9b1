#include "goldgraph/permoracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace goldgraph::permoracle {

namespace {

bool is_odd_prime(std::uint64_t q) {
    if (q < 3 || q % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

} // namespace

Permutation Permutation::identity(std::uint32_t degree) {
    if (degree == 0 || degree > kMaxDegree)
        throw std::invalid_argument("Permutation: degree out of range");
    Permutation p;
    p.degree_ = static_cast<std::uint8_t>(degree);
    for (std::uint32_t i = 0; i < degree; ++i) p.images_[i] = static_cast<std::uint8_t>(i);
    return p;
}

Permutation Permutation::from_images(std::span<const std::uint8_t> images) {
    if (images.empty() || images.size() > kMaxDegree)
        throw std::invalid_argument("Permutation: degree out of range");
    std::array<bool, kMaxDegree> seen{};
    for (auto v : images) {
        if (v >= images.size() || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[v] = true;
    }
    Permutation p;
    p.degree_ = static_cast<std::uint8_t>(images.size());
    std::copy(images.begin(), images.end(), p.images_.begin());
    return p;
}

Permutation Permutation::from_cycle(std::uint32_t degree, std::span<const std::uint8_t> symbols) {
    Permutation p = identity(degree);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const std::uint8_t from = symbols[i];
        const std::uint8_t to = symbols[(i + 1) % symbols.size()];
        if (from >= degree || to >= degree)
            throw std::invalid_argument("Permutation: cycle symbol out of range");
        p.images_[from] = to;
    }
    return p;
}

Permutation Permutation::canonical_q_cycle(std::uint32_t degree, std::uint32_t q) {
    if (q > degree) throw std::invalid_argument("Permutation: cycle longer than degree");
    Permutation p = identity(degree);
    for (std::uint32_t i = 0; i + 1 < q; ++i) p.images_[i] = static_cast<std::uint8_t>(i + 1);
    p.images_[q - 1] = 0;
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    Permutation r;
    r.degree_ = degree_;
    for (std::uint32_t i = 0; i < degree_; ++i) r.images_[i] = images_[other.images_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.degree_ = degree_;
    for (std::uint32_t i = 0; i < degree_; ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    Permutation r;
    r.degree_ = degree_;
    for (std::uint32_t i = 0; i < degree_; ++i) r.images_[g.images_[i]] = g.images_[images_[i]];
    return r;
}

bool Permutation::is_even() const {
    std::array<bool, kMaxDegree> seen{};
    std::uint32_t cycles = 0;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::uint32_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return (degree_ - cycles) % 2 == 0;
}

std::uint64_t Permutation::order() const {
    std::uint64_t o = 1;
    for (auto len : cycle_lengths()) o = std::lcm(o, static_cast<std::uint64_t>(len));
    return o;
}

std::vector<std::uint32_t> Permutation::cycle_lengths() const {
    std::array<bool, kMaxDegree> seen{};
    std::vector<std::uint32_t> lengths;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        if (seen[i]) continue;
        std::uint32_t len = 0;
        for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

std::optional<std::uint32_t> GroupSnapshot::index_of(const Permutation& x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::uint32_t>(it - elements.begin());
}

GroupSnapshot enumerate_group(std::uint32_t n, bool allow_degree_10) {
    if (n < 2) throw std::invalid_argument("enumerate_group: degree must be >= 2");
    if (n > kMaxDegree)
        throw resource_limit_error("enumerate_group: degree exceeds brute-force ceiling 10");
    if (n == kMaxDegree && !allow_degree_10)
        throw resource_limit_error("enumerate_group: degree 10 requires explicit opt-in");

    GroupSnapshot g;
    g.degree = n;

    // next_permutation walks lexicographically, so the even subsequence
    // arrives already sorted.
    std::array<std::uint8_t, kMaxDegree> work{};
    std::iota(work.begin(), work.begin() + n, static_cast<std::uint8_t>(0));
    do {
        auto p = Permutation::from_images(std::span<const std::uint8_t>(work.data(), n));
        if (p.is_even()) g.elements.push_back(p);
    } while (std::next_permutation(work.begin(), work.begin() + n));

    g.orders.reserve(g.elements.size());
    std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> by_type;
    for (std::uint32_t i = 0; i < g.elements.size(); ++i) {
        const auto lens = g.elements[i].cycle_lengths();
        g.orders.push_back(static_cast<std::uint32_t>(g.elements[i].order()));
        by_type[lens].push_back(i);
    }

    // One class per cycle type, except the all-odd all-distinct types, which
    // break in two; membership in the rep's half is decided by an explicit
    // conjugation sweep over the whole group.
    g.class_ids.assign(g.elements.size(), 0);
    std::uint32_t next_id = 0;
    for (const auto& [type, members] : by_type) {
        bool distinct_odd = true;
        for (std::size_t i = 0; i < type.size(); ++i) {
            if (type[i] % 2 == 0 || (i > 0 && type[i] == type[i - 1])) distinct_odd = false;
        }
        if (!distinct_odd) {
            for (auto i : members) g.class_ids[i] = next_id;
            ++next_id;
            continue;
        }
        const Permutation& rep = g.elements[members.front()];
        std::vector<bool> in_rep_class(g.elements.size(), false);
        for (const auto& conj : g.elements) {
            const auto idx = g.index_of(rep.conjugated_by(conj));
            in_rep_class[*idx] = true;
        }
        const std::uint32_t id_rep = next_id++;
        const std::uint32_t id_other = next_id++;
        for (auto i : members) g.class_ids[i] = in_rep_class[i] ? id_rep : id_other;
    }
    g.class_count = next_id;
    return g;
}

std::uint64_t centralizer_order(const GroupSnapshot& g, const Permutation& x) {
    if (!g.contains(x))
        throw std::invalid_argument("centralizer_order: element not in the group");
    std::uint64_t count = 0;
    for (const auto& e : g.elements) count += e.compose(x) == x.compose(e);
    return count;
}

std::vector<std::uint32_t> centralizer_indices(const GroupSnapshot& g, const Permutation& x) {
    if (!g.contains(x))
        throw std::invalid_argument("centralizer_indices: element not in the group");
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < g.elements.size(); ++i)
        if (g.elements[i].compose(x) == x.compose(g.elements[i])) out.push_back(i);
    return out;
}

namespace {

std::vector<Permutation> nontrivial_powers(const Permutation& x, std::uint32_t q) {
    std::vector<Permutation> powers;
    Permutation acc = x;
    for (std::uint32_t k = 1; k < q; ++k) {
        powers.push_back(acc);
        acc = acc.compose(x);
    }
    std::sort(powers.begin(), powers.end());
    return powers;
}

void check_sylow_range(const GroupSnapshot& g, std::uint32_t q) {
    if (!is_odd_prime(q) || 2 * q <= g.degree || q > g.degree)
        throw std::invalid_argument(
            "sylow_normalizer: q must be an odd prime with n/2 < q <= n");
}

} // namespace

std::uint64_t sylow_normalizer_order(const GroupSnapshot& g, std::uint32_t q) {
    check_sylow_range(g, q);
    const auto x = Permutation::canonical_q_cycle(g.degree, q);
    const auto powers = nontrivial_powers(x, q);
    std::uint64_t count = 0;
    for (const auto& e : g.elements)
        count += std::binary_search(powers.begin(), powers.end(), x.conjugated_by(e));
    return count;
}

std::vector<std::uint32_t> sylow_normalizer_indices(const GroupSnapshot& g, std::uint32_t q) {
    check_sylow_range(g, q);
    const auto x = Permutation::canonical_q_cycle(g.degree, q);
    const auto powers = nontrivial_powers(x, q);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < g.elements.size(); ++i)
        if (std::binary_search(powers.begin(), powers.end(), x.conjugated_by(g.elements[i])))
            out.push_back(i);
    return out;
}

bool has_element_of_order(const GroupSnapshot& g, std::uint64_t m) {
    for (auto o : g.orders)
        if (o == m) return true;
    return false;
}

bool has_element_of_order(const GroupSnapshot& g, std::uint64_t m,
                          std::span<const std::uint32_t> within) {
    for (auto i : within) {
        if (i >= g.orders.size())
            throw std::invalid_argument("has_element_of_order: index out of range");
        if (g.orders[i] == m) return true;
    }
    return false;
}

} // namespace goldgraph::permoracle
