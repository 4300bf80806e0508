#include "lgd/polynomial.hpp"

namespace lgd {

Polynomial<ResidueInt> reduce_mod(const Polynomial<BigInt>& f, std::int64_t m)
{
    std::vector<ResidueInt> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        BigInt r = v % m;
        c.emplace_back(r.convert_to<std::int64_t>(), m);
    }
    return Polynomial<ResidueInt>(std::move(c));
}

std::pair<Polynomial<ResidueInt>, Polynomial<ResidueInt>> divmod(const Polynomial<ResidueInt>& f,
                                                                 const Polynomial<ResidueInt>& g)
{
    if (g.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    std::vector<ResidueInt> rem = f.coeffs();
    const int dg = g.degree();
    const ResidueInt inv = mod_inverse(g.leading());
    const ResidueInt zero(0, g.leading().modulus());
    std::vector<ResidueInt> quo(static_cast<std::size_t>(std::max(f.degree() - dg + 1, 0)), zero);
    for (int i = f.degree(); i >= dg; --i) {
        const ResidueInt k = rem[static_cast<std::size_t>(i)] * inv;
        if (k.is_zero()) {
            continue;
        }
        quo[static_cast<std::size_t>(i - dg)] = k;
        for (int j = 0; j <= dg; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - dg + j)];
            slot = slot - k * g[static_cast<std::size_t>(j)];
        }
    }
    return {Polynomial<ResidueInt>(std::move(quo)), Polynomial<ResidueInt>(std::move(rem))};
}

Polynomial<ResidueInt> gcd(Polynomial<ResidueInt> f, Polynomial<ResidueInt> g)
{
    while (!g.is_zero()) {
        auto r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) {
        return f;
    }
    return mod_inverse(f.leading()) * f;
}

Polynomial<BigInt> primitive_part(const Polynomial<BigRat>& f)
{
    if (f.is_zero()) {
        throw DomainError("primitive part of the zero polynomial");
    }
    BigInt den = 1;
    for (const auto& c : f.coeffs()) {
        den = lcm(den, denominator(c));
    }
    std::vector<BigInt> ints;
    BigInt content = 0;
    for (const auto& c : f.coeffs()) {
        ints.push_back(numerator(c) * (den / denominator(c)));
        content = gcd(content, ints.back());
    }
    if (ints.back() < 0) {
        content = -content;
    }
    for (auto& v : ints) {
        v /= content;
    }
    return Polynomial<BigInt>(std::move(ints));
}

} // namespace lgd
