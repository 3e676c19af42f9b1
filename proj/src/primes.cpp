#include "goldgraph/primes.hpp"

#include <bit>
#include <stdexcept>

namespace goldgraph::primes {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("PrimeSieve: limit must be >= 2");

    const std::uint64_t words = limit / kWordBits + 1;
    bits_.assign(words, ~0ULL);
    auto clear_bit = [this](std::uint64_t x) {
        bits_[x / kWordBits] &= ~(1ULL << (x % kWordBits));
    };
    clear_bit(0);
    clear_bit(1);
    // mask out slots above limit in the last word
    const std::uint64_t top = limit % kWordBits;
    if (top != kWordBits - 1) bits_.back() &= (1ULL << (top + 1)) - 1;

    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!(bits_[p / kWordBits] >> (p % kWordBits) & 1ULL)) continue;
        for (std::uint64_t m = p * p; m <= limit; m += p) clear_bit(m);
    }

    const std::uint64_t block_numbers = kBlockWords * kWordBits;
    block_pi_.assign(limit / block_numbers + 1, 0);
    std::uint64_t running = 0;
    for (std::uint64_t b = 0; b < block_pi_.size(); ++b) {
        block_pi_[b] = running;
        const std::uint64_t w0 = b * kBlockWords;
        const std::uint64_t w1 = std::min<std::uint64_t>(w0 + kBlockWords, bits_.size());
        for (std::uint64_t w = w0; w < w1; ++w) running += std::popcount(bits_[w]);
    }
}

bool PrimeSieve::is_prime(std::uint64_t x) const {
    if (x > limit_) throw std::out_of_range("PrimeSieve::is_prime: x exceeds sieve limit");
    return bits_[x / kWordBits] >> (x % kWordBits) & 1ULL;
}

std::uint64_t PrimeSieve::prime_count(std::uint64_t x) const {
    if (x > limit_) throw std::out_of_range("PrimeSieve::prime_count: x exceeds sieve limit");
    const std::uint64_t block_numbers = kBlockWords * kWordBits;
    std::uint64_t count = block_pi_[x / block_numbers];
    const std::uint64_t w0 = (x / block_numbers) * kBlockWords;
    const std::uint64_t wx = x / kWordBits;
    for (std::uint64_t w = w0; w < wx; ++w) count += std::popcount(bits_[w]);
    const std::uint64_t r = x % kWordBits;
    const std::uint64_t mask = (r == 63) ? ~0ULL : ((1ULL << (r + 1)) - 1);
    count += std::popcount(bits_[wx] & mask);
    return count;
}

GoldbachPairSet goldbach_pairs(const PrimeSieve& s, std::uint64_t target) {
    if (target % 2 != 0 || target < 8)
        throw std::invalid_argument("goldbach_pairs: target must be even and >= 8");
    if (target > s.limit())
        throw std::out_of_range("goldbach_pairs: target exceeds sieve limit");

    GoldbachPairSet out;
    out.target = target;
    for (std::uint64_t p = 3; p < target - p; p += 2) {
        if (s.is_prime(p) && s.is_prime(target - p)) out.pairs.emplace_back(p, target - p);
    }
    return out;
}

bool rosser_interval_holds(const PrimeSieve& s, std::uint64_t x) {
    if (x < 37) throw std::domain_error("rosser_interval_holds: requires x >= 37");
    if (x > s.limit())
        throw std::out_of_range("rosser_interval_holds: x exceeds sieve limit");
    return s.prime_count(x) - s.prime_count(6 * x / 7) >= 1;
}

} // namespace goldgraph::primes
