#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "lgd/errors.hpp"

namespace lgd {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
/// Exact rational; the backend keeps it reduced with a positive denominator.
using BigRat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;

inline BigRat make_rat(const BigInt& num, const BigInt& den) { return BigRat(num, den); }

/// Floor of the integer square root; `n` must be non-negative.
BigInt isqrt(const BigInt& n);

/// Exact square root of a rational if it is a perfect square, the non-negative root.
std::optional<BigRat> rational_sqrt(const BigRat& r);

/// Decimal form "n" or "n/d".
std::string to_string(const BigRat& r);
std::string to_string(const BigInt& n);

/// p-adic valuation of a nonzero integer.
int valuation(BigInt n, std::int64_t p);
int valuation(std::int64_t n, std::int64_t p);

/// b^e as a 64-bit integer; throws DomainError on overflow.
std::int64_t checked_pow(std::int64_t base, unsigned exp);

/// Element of Z/m. Arithmetic is defined only between equal moduli.
class ResidueInt {
public:
    ResidueInt() = default;
    /// Reduces `value` into [0, modulus). Requires modulus >= 1.
    ResidueInt(std::int64_t value, std::int64_t modulus);

    [[nodiscard]] std::int64_t value() const { return value_; }
    [[nodiscard]] std::int64_t modulus() const { return modulus_; }
    [[nodiscard]] bool is_zero() const { return value_ == 0; }

    ResidueInt operator+(const ResidueInt& o) const;
    ResidueInt operator-(const ResidueInt& o) const;
    ResidueInt operator*(const ResidueInt& o) const;
    /// Multiplication by the inverse; throws NotInvertible.
    ResidueInt operator/(const ResidueInt& o) const;
    ResidueInt operator-() const;
    ResidueInt& operator+=(const ResidueInt& o) { return *this = *this + o; }
    ResidueInt& operator-=(const ResidueInt& o) { return *this = *this - o; }
    ResidueInt& operator*=(const ResidueInt& o) { return *this = *this * o; }

    bool operator==(const ResidueInt&) const = default;
    auto operator<=>(const ResidueInt&) const = default;

private:
    void require_same(const ResidueInt& o) const;

    std::int64_t value_ = 0;
    std::int64_t modulus_ = 1;
};

/// (a * b) mod m for 0 <= a, b < m.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m);

ResidueInt mod_pow(const ResidueInt& base, std::uint64_t exp);
ResidueInt mod_inverse(const ResidueInt& x);

/// Legendre symbol (a / l) for an odd prime l, via Euler's criterion.
int legendre_symbol(std::int64_t a, std::int64_t l);

/// Square root modulo an odd prime (Tonelli-Shanks). Returns the smaller root.
std::optional<ResidueInt> sqrt_mod(const ResidueInt& a);

/// Discrete logarithm to base 1+p in 1 + pZ/p^{N+1}.
///
/// `u.modulus()` must be p^{N+1} with N >= 1 and u = 1 mod p. The result is the
/// unique x mod p^N with (1+p)^x = u mod p^{N+1}, found one base-p digit per
/// level: raising u * (1+p)^{-x_partial} to p^{N-1-i} lands in 1 + p^N Z, and
/// (1 + p^N)^d = 1 + d p^N there.
ResidueInt discrete_log_1p(const ResidueInt& u, std::int64_t p);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::int64_t n);
/// Probabilistic primality test (25 Miller-Rabin rounds with a fixed seed).
bool is_probable_prime(const BigInt& n);

} // namespace lgd
