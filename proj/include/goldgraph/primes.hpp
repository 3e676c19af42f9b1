#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace goldgraph::primes {

// Eratosthenes bit table with per-block cumulative prime counts. The count
// table stores one entry per 4096-number block and pi(x) finishes with a
// popcount scan inside the block, so limits up to 1e8 stay cheap on memory
// (~12.5 MB of bits + ~200 KB of counts) while point queries stay O(1)-ish.
// Immutable after construction; safe for concurrent reads.
class PrimeSieve {
public:
    // limit >= 2 required.
    explicit PrimeSieve(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }

    // x <= limit required.
    bool is_prime(std::uint64_t x) const;

    // pi(x) = number of primes <= x; x <= limit required.
    std::uint64_t prime_count(std::uint64_t x) const;

private:
    static constexpr std::uint64_t kWordBits = 64;
    static constexpr std::uint64_t kBlockWords = 64; // 4096 numbers per block

    std::uint64_t limit_;
    std::vector<std::uint64_t> bits_;      // bit x set <=> x prime
    std::vector<std::uint64_t> block_pi_;  // primes below each block start
};

// Unordered decompositions target = p + q with p < q distinct odd primes.
// Pairs are sorted ascending by p; duplicate-free by construction.
struct GoldbachPairSet {
    std::uint64_t target = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

    bool empty() const noexcept { return pairs.empty(); }
    std::size_t size() const noexcept { return pairs.size(); }
};

// target even, >= 8, <= s.limit(). Excludes p = q and any pair containing 2.
GoldbachPairSet goldbach_pairs(const PrimeSieve& s, std::uint64_t target);

// pi(x) - pi(floor(6x/7)) >= 1, for 37 <= x <= s.limit(). Floor is exact here:
// pi is a step function and 6x/7 is never prime when it is not an integer.
bool rosser_interval_holds(const PrimeSieve& s, std::uint64_t x);

} // namespace goldgraph::primes
