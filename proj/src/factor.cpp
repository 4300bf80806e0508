#include "lgd/factor.hpp"

#include <algorithm>

#include "lgd/sieve.hpp"

namespace lgd {

namespace {

const std::vector<std::int64_t>& trial_primes()
{
    static const std::vector<std::int64_t> primes = prime_sieve(1'000'000);
    return primes;
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor or nullopt.
std::optional<BigInt> pollard_rho(const BigInt& n, std::int64_t max_iterations)
{
    for (int c = 1; c < 20; ++c) {
        BigInt y = 2, x = 2, g = 1, q = 1, ys;
        std::int64_t r = 1, iterations = 0;
        const int m = 128;
        auto f = [&](const BigInt& v) { return (v * v + c) % n; };
        while (g == 1) {
            x = y;
            for (std::int64_t i = 0; i < r; ++i) {
                y = f(y);
            }
            std::int64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::int64_t steps = std::min<std::int64_t>(m, r - k);
                for (std::int64_t i = 0; i < steps; ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
                iterations += steps;
            }
            r *= 2;
            if (iterations > max_iterations) {
                return std::nullopt;
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
    return std::nullopt;
}

bool split_into(const BigInt& n, std::map<BigInt, int>& out, const FactorBudget& budget)
{
    if (n == 1) {
        return true;
    }
    if (is_probable_prime(n)) {
        ++out[n];
        return true;
    }
    const auto factor = pollard_rho(n, budget.rho_iterations);
    if (!factor) {
        return false;
    }
    return split_into(*factor, out, budget) && split_into(n / *factor, out, budget);
}

} // namespace

std::optional<std::map<BigInt, int>> factorize(const BigInt& n, const FactorBudget& budget)
{
    if (n == 0) {
        throw DomainError("cannot factor zero");
    }
    BigInt rest = abs(n);
    std::map<BigInt, int> out;
    for (const std::int64_t p : trial_primes()) {
        if (p > budget.trial_limit) {
            break;
        }
        if (BigInt(p) * p > rest) {
            break;
        }
        while (rest % p == 0) {
            rest /= p;
            ++out[BigInt(p)];
        }
    }
    if (rest == 1) {
        return out;
    }
    const BigInt bound = BigInt(budget.trial_limit);
    if (rest <= bound * bound) {
        ++out[rest];
        return out;
    }
    if (!split_into(rest, out, budget)) {
        return std::nullopt;
    }
    return out;
}

std::optional<std::vector<BigInt>> positive_divisors(const BigInt& n, const FactorBudget& budget)
{
    const auto factors = factorize(n, budget);
    if (!factors) {
        return std::nullopt;
    }
    std::vector<BigInt> divisors{1};
    for (const auto& [prime, exponent] : *factors) {
        const std::size_t current = divisors.size();
        BigInt power = 1;
        for (int e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < current; ++i) {
                divisors.push_back(divisors[i] * power);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

} // namespace lgd
