#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lgd {

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 20;

/// All primes <= limit in ascending order, via a segmented sieve of
/// Eratosthenes. Memory is O(sqrt(limit) + segment_size).
std::vector<std::int64_t> prime_sieve(std::int64_t limit,
                                      std::size_t segment_size = kDefaultSegmentSize);

} // namespace lgd
