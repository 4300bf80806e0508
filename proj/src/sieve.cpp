#include "lgd/sieve.hpp"

#include <algorithm>

#include "lgd/errors.hpp"

namespace lgd {

namespace {

std::vector<std::int64_t> simple_sieve(std::int64_t limit)
{
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) {
            continue;
        }
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return primes;
}

} // namespace

std::vector<std::int64_t> prime_sieve(std::int64_t limit, std::size_t segment_size)
{
    if (limit < 2) {
        return {};
    }
    if (segment_size == 0) {
        throw DomainError("segment size must be positive");
    }
    std::int64_t root = 1;
    while ((root + 1) * (root + 1) <= limit) {
        ++root;
    }
    const std::vector<std::int64_t> base = simple_sieve(root);

    std::vector<std::int64_t> primes;
    std::vector<char> segment(segment_size);
    const auto span = static_cast<std::int64_t>(segment_size);
    for (std::int64_t low = 2; low <= limit; low += span) {
        const std::int64_t high = std::min(low + span - 1, limit);
        std::fill(segment.begin(), segment.end(), 1);
        for (const std::int64_t p : base) {
            if (p * p > high) {
                break;
            }
            std::int64_t start = std::max(p * p, ((low + p - 1) / p) * p);
            for (std::int64_t j = start; j <= high; j += p) {
                segment[static_cast<std::size_t>(j - low)] = 0;
            }
        }
        for (std::int64_t i = low; i <= high; ++i) {
            if (segment[static_cast<std::size_t>(i - low)] != 0) {
                primes.push_back(i);
            }
        }
    }
    return primes;
}

} // namespace lgd
