#include "lgd/arith.hpp"

#include <array>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

namespace lgd {

BigInt isqrt(const BigInt& n)
{
    if (n < 0) {
        throw DomainError("isqrt of a negative integer");
    }
    return boost::multiprecision::sqrt(n);
}

std::optional<BigRat> rational_sqrt(const BigRat& r)
{
    if (r < 0) {
        return std::nullopt;
    }
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    const BigInt sn = isqrt(num);
    const BigInt sd = isqrt(den);
    if (sn * sn != num || sd * sd != den) {
        return std::nullopt;
    }
    return BigRat(sn, sd);
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const BigRat& r)
{
    if (denominator(r) == 1) {
        return numerator(r).str();
    }
    return numerator(r).str() + "/" + denominator(r).str();
}

int valuation(BigInt n, std::int64_t p)
{
    if (n == 0) {
        throw DomainError("valuation of zero");
    }
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int valuation(std::int64_t n, std::int64_t p)
{
    if (n == 0) {
        throw DomainError("valuation of zero");
    }
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::int64_t checked_pow(std::int64_t base, unsigned exp)
{
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) {
            throw DomainError("integer power overflows 64 bits");
        }
    }
    return r;
}

ResidueInt::ResidueInt(std::int64_t value, std::int64_t modulus) : modulus_(modulus)
{
    if (modulus < 1) {
        throw DomainError("modulus must be positive");
    }
    value_ = value % modulus;
    if (value_ < 0) {
        value_ += modulus;
    }
}

void ResidueInt::require_same(const ResidueInt& o) const
{
    if (modulus_ != o.modulus_) {
        throw DomainError("residues with different moduli");
    }
}

ResidueInt ResidueInt::operator+(const ResidueInt& o) const
{
    require_same(o);
    std::int64_t s = value_ + o.value_;
    if (s >= modulus_) {
        s -= modulus_;
    }
    ResidueInt r;
    r.value_ = s;
    r.modulus_ = modulus_;
    return r;
}

ResidueInt ResidueInt::operator-(const ResidueInt& o) const
{
    require_same(o);
    std::int64_t s = value_ - o.value_;
    if (s < 0) {
        s += modulus_;
    }
    ResidueInt r;
    r.value_ = s;
    r.modulus_ = modulus_;
    return r;
}

ResidueInt ResidueInt::operator*(const ResidueInt& o) const
{
    require_same(o);
    ResidueInt r;
    r.value_ = mul_mod(value_, o.value_, modulus_);
    r.modulus_ = modulus_;
    return r;
}

ResidueInt ResidueInt::operator/(const ResidueInt& o) const { return *this * mod_inverse(o); }

ResidueInt ResidueInt::operator-() const { return ResidueInt(-value_, modulus_); }

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m)
{
    if (m == 1) {
        return 0;
    }
    base %= m;
    if (base < 0) {
        base += m;
    }
    std::int64_t r = 1;
    while (exp > 0) {
        if (exp & 1U) {
            r = mul_mod(r, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return r;
}

ResidueInt mod_pow(const ResidueInt& base, std::uint64_t exp)
{
    return ResidueInt(pow_mod(base.value(), exp, base.modulus()), base.modulus());
}

ResidueInt mod_inverse(const ResidueInt& x)
{
    const std::int64_t m = x.modulus();
    std::int64_t old_r = x.value(), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1 && m != 1) {
        throw NotInvertible(std::to_string(x.value()) + " is not invertible mod " + std::to_string(m));
    }
    return ResidueInt(old_s, m);
}

int legendre_symbol(std::int64_t a, std::int64_t l)
{
    if (l < 3 || l % 2 == 0) {
        throw DomainError("legendre_symbol requires an odd prime");
    }
    const std::int64_t e = pow_mod(a, static_cast<std::uint64_t>((l - 1) / 2), l);
    if (e == 0) {
        return 0;
    }
    return e == 1 ? 1 : -1;
}

std::optional<ResidueInt> sqrt_mod(const ResidueInt& a)
{
    const std::int64_t l = a.modulus();
    if (a.is_zero()) {
        return a;
    }
    if (legendre_symbol(a.value(), l) != 1) {
        return std::nullopt;
    }
    // l - 1 = q * 2^s with q odd
    std::int64_t q = l - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::int64_t z = 2;
    while (legendre_symbol(z, l) != -1) {
        ++z;
    }
    std::int64_t m = s;
    std::int64_t c = pow_mod(z, static_cast<std::uint64_t>(q), l);
    std::int64_t t = pow_mod(a.value(), static_cast<std::uint64_t>(q), l);
    std::int64_t r = pow_mod(a.value(), static_cast<std::uint64_t>((q + 1) / 2), l);
    while (t != 1) {
        std::int64_t i = 0;
        std::int64_t t2 = t;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, l);
            ++i;
        }
        std::int64_t b = c;
        for (std::int64_t j = 0; j < m - i - 1; ++j) {
            b = mul_mod(b, b, l);
        }
        m = i;
        c = mul_mod(b, b, l);
        t = mul_mod(t, c, l);
        r = mul_mod(r, b, l);
    }
    return ResidueInt(std::min(r, l - r), l);
}

ResidueInt discrete_log_1p(const ResidueInt& u, std::int64_t p)
{
    if (p < 3 || !is_prime(p)) {
        throw DomainError("discrete_log_1p requires an odd prime");
    }
    const std::int64_t big = u.modulus();
    int levels = 0;
    for (std::int64_t m = big; m > 1; m /= p) {
        if (m % p != 0) {
            throw DomainError("modulus is not a power of p");
        }
        ++levels;
    }
    if (levels < 2) {
        throw DomainError("discrete_log_1p needs modulus p^{N+1} with N >= 1");
    }
    const int n_digits = levels - 1;
    if (u.value() % p != 1 % p) {
        throw DomainError("argument is not congruent to 1 mod p");
    }
    const std::int64_t p_top = checked_pow(p, static_cast<unsigned>(n_digits)); // p^N
    const ResidueInt generator(1 + p, big);
    const ResidueInt generator_inv = mod_inverse(generator);

    std::int64_t x = 0;
    std::int64_t place = 1;
    ResidueInt rest = u; // u * (1+p)^{-x}
    ResidueInt step_inv = generator_inv; // (1+p)^{-place}
    for (int i = 0; i < n_digits; ++i) {
        const auto e = static_cast<std::uint64_t>(checked_pow(p, static_cast<unsigned>(n_digits - 1 - i)));
        const ResidueInt h = mod_pow(rest, e);
        const std::int64_t digit = ((h.value() - 1) / p_top) % p;
        x += digit * place;
        rest = rest * mod_pow(step_inv, static_cast<std::uint64_t>(digit));
        step_inv = mod_pow(step_inv, static_cast<std::uint64_t>(p));
        place *= p;
    }
    return ResidueInt(x, p_top);
}

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    std::int64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = pow_mod(a, static_cast<std::uint64_t>(d), n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

bool is_probable_prime(const BigInt& n)
{
    if (n < 2) {
        return false;
    }
    if (n <= BigInt(INT64_MAX)) {
        return is_prime(n.convert_to<std::int64_t>());
    }
    std::mt19937_64 gen(0x5eed);
    return boost::multiprecision::miller_rabin_test(n, 25, gen);
}

} // namespace lgd
