#include "lgd/divisibility.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace lgd {

namespace {

std::uint64_t key(const ReducedPoint& p)
{
    if (p.infinity) {
        return ~std::uint64_t{0};
    }
    return (static_cast<std::uint64_t>(p.x.value()) << 32U) | static_cast<std::uint64_t>(p.y.value());
}

ReducedPoint random_point(const ReducedCurve& e, std::mt19937_64& rng)
{
    const std::int64_t l = e.a.modulus();
    while (true) {
        const ResidueInt x(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(l)), l);
        const auto y = sqrt_mod(x * x * x + e.a * x + e.b);
        if (y) {
            return ReducedPoint::affine(x, rng() % 2 == 0 ? *y : -*y);
        }
    }
}

/// Elements of the Sylow p-subgroup of order p^a, grown from m-multiples of
/// random points until it has p^a elements.
std::vector<ReducedPoint> sylow_subgroup(const ReducedCurve& e, std::int64_t m, std::int64_t order,
                                         std::mt19937_64& rng)
{
    std::vector<ReducedPoint> elems{ReducedPoint::at_infinity()};
    std::unordered_set<std::uint64_t> seen{key(elems.front())};
    for (int attempt = 0; attempt < 256 && static_cast<std::int64_t>(elems.size()) < order; ++attempt) {
        const ReducedPoint g = scalar_mul(e, m, random_point(e, rng));
        if (seen.contains(key(g))) {
            continue;
        }
        // H <- H + <g>: add cosets H + k g until k g falls back into H
        const std::vector<ReducedPoint> base = elems;
        ReducedPoint step = g;
        while (!seen.contains(key(step))) {
            for (const auto& h : base) {
                const ReducedPoint s = add(e, h, step);
                if (seen.insert(key(s)).second) {
                    elems.push_back(s);
                }
            }
            step = add(e, step, g);
        }
    }
    if (static_cast<std::int64_t>(elems.size()) == order) {
        return elems;
    }
    // sampling stalled: take every point killed by p^a
    elems.clear();
    for (const auto& pt : enumerate_points(e)) {
        if (scalar_mul(e, order, pt).infinity) {
            elems.push_back(pt);
        }
    }
    return elems;
}

LocalVerdict structural_test(const ReducedCurve& e, const ReducedPoint& r, std::int64_t p, int n, std::int64_t ell)
{
    const std::int64_t count = count_points(e);
    std::int64_t sylow_order = 1;
    std::int64_t m = count;
    while (m % p == 0) {
        m /= p;
        sylow_order *= p;
    }
    const std::int64_t pn = checked_pow(p, static_cast<unsigned>(n));

    // idempotent for the Sylow part: = 1 mod p^a, = 0 mod m
    std::int64_t idem = 0;
    if (sylow_order > 1) {
        idem = m * mod_inverse(ResidueInt(m, sylow_order)).value();
    }
    const ReducedPoint r_sylow = scalar_mul(e, idem, r);
    const ReducedPoint r_rest = sub(e, r, r_sylow);

    ReducedPoint w_rest = ReducedPoint::at_infinity();
    if (m > 1) {
        w_rest = scalar_mul(e, mod_inverse(ResidueInt(pn, m)).value(), r_rest);
    }

    LocalVerdict v{ell, false, LocalMethod::Structural, std::nullopt};
    std::optional<ReducedPoint> w_sylow;
    if (r_sylow.infinity) {
        w_sylow = ReducedPoint::at_infinity();
    } else {
        std::mt19937_64 rng(static_cast<std::uint64_t>(ell) * 1000003ULL + static_cast<std::uint64_t>(p));
        for (const auto& h : sylow_subgroup(e, m, sylow_order, rng)) {
            if (scalar_mul(e, pn, h) == r_sylow) {
                w_sylow = h;
                break;
            }
        }
    }
    if (w_sylow) {
        v.divisible = true;
        v.witness = add(e, *w_sylow, w_rest);
        if (!(scalar_mul(e, pn, *v.witness) == r)) {
            throw std::logic_error("structural witness does not reproduce the reduced point");
        }
    }
    return v;
}

LocalVerdict brute_force_test(const ReducedCurve& e, const ReducedPoint& r, std::int64_t p, int n, std::int64_t ell)
{
    const std::int64_t pn = checked_pow(p, static_cast<unsigned>(n));
    LocalVerdict v{ell, false, LocalMethod::BruteForce, std::nullopt};
    for (const auto& pt : enumerate_points(e)) {
        if (scalar_mul(e, pn, pt) == r) {
            v.divisible = true;
            v.witness = pt;
            break;
        }
    }
    return v;
}

bool point_less(const RationalPoint& a, const RationalPoint& b)
{
    if (a.infinity || b.infinity) {
        return a.infinity && !b.infinity;
    }
    if (a.x != b.x) {
        return a.x < b.x;
    }
    return a.y < b.y;
}

void insert_unique(std::vector<RationalPoint>& pts, const RationalPoint& q)
{
    if (std::find(pts.begin(), pts.end(), q) == pts.end()) {
        pts.push_back(q);
    }
}

} // namespace

std::string_view to_string(LocalMethod m)
{
    return m == LocalMethod::Structural ? "structural" : "brute_force";
}

std::string_view to_string(GlobalStatus s)
{
    switch (s) {
    case GlobalStatus::Divisible:
        return "divisible";
    case GlobalStatus::NotDivisible:
        return "not_divisible";
    case GlobalStatus::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

bool admissible_prime(const RationalCurve& curve, std::int64_t p, std::int64_t ell)
{
    return ell > 2 && is_prime(ell) && ell != p && curve.discriminant() % ell != 0;
}

LocalVerdict local_divide_test(const RationalCurve& curve, const RationalPoint& point, std::int64_t p, int n,
                               std::int64_t ell, LocalMethod method)
{
    if (p < 2 || !is_prime(p) || n < 1) {
        throw DomainError("divisibility needs a prime p and n >= 1");
    }
    if (!admissible_prime(curve, p, ell)) {
        throw BadPrime("l = " + std::to_string(ell) + " is not admissible (l = 2, l = p, composite or bad reduction)");
    }
    if (!curve.contains(point)) {
        throw DomainError("point is not on the curve");
    }
    const ReducedCurve e = reduce_curve(curve, ell);
    const ReducedPoint r = reduce_at(curve, point, ell);
    return method == LocalMethod::Structural ? structural_test(e, r, p, n, ell) : brute_force_test(e, r, p, n, ell);
}

GlobalOutcome global_divide(const RationalCurve& curve, const RationalPoint& point, std::int64_t p, int n,
                            const GlobalOptions& options)
{
    if (p < 2 || !is_prime(p) || n < 1) {
        throw DomainError("divisibility needs a prime p and n >= 1");
    }
    if (!curve.contains(point)) {
        throw DomainError("point is not on the curve");
    }
    GlobalOutcome out;
    std::vector<RationalPoint> frontier{point};

    if (point.infinity || torsion_order(curve, point) != 0) {
        // any Q with p^n Q = P torsion is itself torsion
        out.via_torsion = true;
        const auto torsion = torsion_subgroup(curve);
        for (int stage = 0; stage < n && !frontier.empty(); ++stage) {
            std::vector<RationalPoint> next;
            for (const auto& q : torsion) {
                if (std::find(frontier.begin(), frontier.end(), curve.mul(p, q)) != frontier.end()) {
                    insert_unique(next, q);
                }
            }
            frontier = std::move(next);
        }
    } else {
        DivisionPolynomials<BigRat> psi(curve.weierstrass());
        const auto [num, den] = psi.multiplication_map(static_cast<int>(p));
        for (int stage = 0; stage < n && !frontier.empty(); ++stage) {
            std::vector<RationalPoint> next;
            for (const auto& target : frontier) {
                const Polynomial<BigRat> equation = num - target.x * den;
                std::vector<BigRat> xs;
                if (options.roots == RootMethod::Lifting) {
                    xs = rational_roots(equation);
                } else {
                    auto found = rational_roots_by_divisors(equation, options.budget);
                    if (!found) {
                        out.status = GlobalStatus::Inconclusive;
                        return out;
                    }
                    xs = std::move(*found);
                }
                for (const auto& x : xs) {
                    const auto y = rational_sqrt(x * x * x + curve.a() * x + curve.b());
                    if (!y) {
                        continue;
                    }
                    for (const BigRat& yy : {*y, BigRat(-*y)}) {
                        const auto q = RationalPoint::affine(x, yy);
                        if (curve.mul(p, q) == target) {
                            insert_unique(next, q);
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    std::sort(frontier.begin(), frontier.end(), point_less);
    const std::int64_t pn = checked_pow(p, static_cast<unsigned>(n));
    for (const auto& q : frontier) {
        if (!(curve.mul(pn, q) == point)) {
            throw std::logic_error("global preimage fails the exact check");
        }
    }
    out.status = frontier.empty() ? GlobalStatus::NotDivisible : GlobalStatus::Divisible;
    out.preimages = std::move(frontier);
    return out;
}

} // namespace lgd
