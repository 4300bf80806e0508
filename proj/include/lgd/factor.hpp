#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lgd/arith.hpp"

namespace lgd {

/// Work limits for integer factorization.
struct FactorBudget {
    std::int64_t trial_limit = 1'000'000;
    /// Iterations of Pollard rho per composite cofactor before giving up.
    std::int64_t rho_iterations = 200'000;
};

/// Prime factorization of |n| as prime -> exponent, or nullopt when the budget
/// runs out. n = 0 is rejected.
std::optional<std::map<BigInt, int>> factorize(const BigInt& n, const FactorBudget& budget = {});

/// All positive divisors of |n| (sorted), or nullopt when factoring fails.
std::optional<std::vector<BigInt>> positive_divisors(const BigInt& n, const FactorBudget& budget = {});

} // namespace lgd
