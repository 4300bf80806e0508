#include "lgd/division.hpp"

#include <algorithm>
#include <set>

#include "lgd/sieve.hpp"

namespace lgd {

namespace {

BigInt eval_int(const Polynomial<BigInt>& f, const BigInt& x)
{
    BigInt acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * x + f[i];
    }
    return acc;
}

/// Exact test F(n/d) = 0 via the homogenised sum of c_i n^i d^{deg-i}.
bool is_root(const Polynomial<BigInt>& f, const BigInt& n, const BigInt& d)
{
    BigInt total = 0;
    BigInt npow = 1;
    const auto deg = static_cast<unsigned>(f.degree());
    for (unsigned i = 0; i <= deg; ++i) {
        total += f[i] * npow * pow(d, deg - i);
        npow *= n;
    }
    return total == 0;
}

BigInt mod_positive(const BigInt& a, const BigInt& m)
{
    BigInt r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m)
{
    BigInt old_r = mod_positive(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        const BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw NotInvertible("no inverse in Hensel lifting");
    }
    return mod_positive(old_s, m);
}

/// n/d with n = d r mod m, |n| <= num_bound, 0 < d <= den_bound, if any.
std::optional<std::pair<BigInt, BigInt>> reconstruct(const BigInt& r, const BigInt& m, const BigInt& num_bound,
                                                     const BigInt& den_bound)
{
    BigInt r0 = m, r1 = mod_positive(r, m), t0 = 0, t1 = 1;
    while (r1 > num_bound) {
        const BigInt q = r0 / r1;
        BigInt tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > den_bound) {
        return std::nullopt;
    }
    BigInt n = r1, d = t1;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (gcd(n, d) != 1) {
        return std::nullopt;
    }
    return std::make_pair(n, d);
}

/// Squarefree part over Q: f / gcd(f, f') with rational Euclid.
Polynomial<BigRat> squarefree_part(const Polynomial<BigRat>& f)
{
    auto rat_divmod = [](const Polynomial<BigRat>& a, const Polynomial<BigRat>& b) {
        std::vector<BigRat> rem = a.coeffs();
        std::vector<BigRat> quo(static_cast<std::size_t>(std::max(a.degree() - b.degree() + 1, 0)), BigRat(0));
        for (int i = a.degree(); i >= b.degree(); --i) {
            const BigRat k = rem[static_cast<std::size_t>(i)] / b.leading();
            if (k == 0) {
                continue;
            }
            quo[static_cast<std::size_t>(i - b.degree())] = k;
            for (int j = 0; j <= b.degree(); ++j) {
                rem[static_cast<std::size_t>(i - b.degree() + j)] -= k * b[static_cast<std::size_t>(j)];
            }
        }
        return std::make_pair(Polynomial<BigRat>(std::move(quo)), Polynomial<BigRat>(std::move(rem)));
    };
    Polynomial<BigRat> a = f, b = f.derivative();
    while (!b.is_zero()) {
        auto r = rat_divmod(a, b).second;
        if (!r.is_zero()) {
            // keep coefficients small
            const auto prim = primitive_part(r);
            std::vector<BigRat> c;
            for (const auto& v : prim.coeffs()) {
                c.emplace_back(v);
            }
            r = Polynomial<BigRat>(std::move(c));
        }
        a = std::move(b);
        b = std::move(r);
    }
    return rat_divmod(f, a).first;
}

std::vector<BigRat> roots_of_squarefree(const Polynomial<BigInt>& f)
{
    const BigInt lead = abs(f.leading());
    const BigInt c0 = abs(f[0]);
    // bounded reconstruction needs l^K > 2 * c0 * lead
    const BigInt target = 2 * c0 * lead + 1;
    static const std::vector<std::int64_t> candidates = prime_sieve(200'000);
    const Polynomial<BigInt> df = f.derivative();
    for (const auto l : candidates) {
        if (l < 101 || f.leading() % l == 0) {
            continue;
        }
        const auto fl = reduce_mod(f, l);
        const auto dfl = reduce_mod(df, l);
        if (gcd(fl, dfl).degree() != 0) {
            continue;
        }
        std::vector<BigRat> out;
        BigInt modulus = l;
        unsigned precision = 1;
        while (modulus <= target) {
            modulus *= modulus;
            precision *= 2;
        }
        for (std::int64_t x = 0; x < l; ++x) {
            if (!fl(ResidueInt(x, l)).is_zero()) {
                continue;
            }
            // Newton lifting, doubling the precision each step
            BigInt r = x;
            BigInt m = l;
            for (unsigned p = 1; p < precision; p *= 2) {
                m *= m;
                const BigInt value = mod_positive(eval_int(f, r), m);
                const BigInt slope = mod_positive(eval_int(df, r), m);
                r = mod_positive(r - value * inverse_mod(slope, m), m);
            }
            const auto nd = reconstruct(r, modulus, c0, lead);
            if (nd && is_root(f, nd->first, nd->second)) {
                out.emplace_back(nd->first, nd->second);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    throw LimitExceeded("no prime below 200000 keeps the polynomial squarefree");
}

/// Splits off the power of x: f = x^k g with g(0) != 0.
Polynomial<BigInt> strip_zero_roots(const Polynomial<BigInt>& f, bool& had_zero)
{
    std::size_t k = 0;
    while (k < f.coeffs().size() && f[k] == 0) {
        ++k;
    }
    had_zero = k > 0;
    return Polynomial<BigInt>(std::vector<BigInt>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end()));
}

} // namespace

DivisionPolynomial<BigRat> division_polynomial(const RationalCurve& curve, int m)
{
    if (m < 1) {
        throw DomainError("division polynomial index must be at least 1");
    }
    DivisionPolynomials<BigRat> table(curve.weierstrass());
    return table(m);
}

std::vector<BigRat> rational_roots(const Polynomial<BigRat>& f)
{
    if (f.is_zero()) {
        throw DomainError("every rational is a root of the zero polynomial");
    }
    bool zero_root = false;
    const Polynomial<BigInt> g = strip_zero_roots(primitive_part(squarefree_part(f)), zero_root);
    std::vector<BigRat> out;
    if (g.degree() >= 1) {
        out = roots_of_squarefree(g);
    }
    if (zero_root) {
        out.emplace_back(0);
        std::sort(out.begin(), out.end());
    }
    return out;
}

std::optional<std::vector<BigRat>> rational_roots_by_divisors(const Polynomial<BigRat>& f, const FactorBudget& budget)
{
    if (f.is_zero()) {
        throw DomainError("every rational is a root of the zero polynomial");
    }
    bool zero_root = false;
    const Polynomial<BigInt> g = strip_zero_roots(primitive_part(f), zero_root);
    std::set<BigRat> found;
    if (zero_root) {
        found.insert(BigRat(0));
    }
    if (g.degree() >= 1) {
        const auto nums = positive_divisors(g[0], budget);
        const auto dens = positive_divisors(g.leading(), budget);
        if (!nums || !dens) {
            return std::nullopt;
        }
        const std::int64_t aux[] = {1000003, 1000033, 1000037};
        std::vector<Polynomial<ResidueInt>> reduced;
        for (const auto l : aux) {
            reduced.push_back(reduce_mod(g, l));
        }
        for (const auto& d : *dens) {
            for (const auto& n0 : *nums) {
                if (gcd(n0, d) != 1) {
                    continue;
                }
                for (const int sign : {1, -1}) {
                    const BigInt n = sign * n0;
                    bool possible = true;
                    for (std::size_t i = 0; i < 3 && possible; ++i) {
                        const std::int64_t l = aux[i];
                        const BigInt dl = d % l;
                        if (dl == 0) {
                            continue;
                        }
                        const ResidueInt x = ResidueInt(BigInt(n % l).convert_to<std::int64_t>(), l) /
                                             ResidueInt(dl.convert_to<std::int64_t>(), l);
                        possible = reduced[i](x).is_zero();
                    }
                    if (possible && is_root(g, n, d)) {
                        found.insert(BigRat(n, d));
                    }
                }
            }
        }
    }
    return std::vector<BigRat>(found.begin(), found.end());
}

} // namespace lgd
