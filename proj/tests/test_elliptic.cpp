#include <random>
#include <set>

#include "doctest.h"
#include "lgd/elliptic.hpp"
#include "lgd/sieve.hpp"

using namespace lgd;

namespace {

RationalCurve curve_ab(long a, long b) { return RationalCurve(BigRat(a), BigRat(b)); }
RationalPoint pt(long x, long y) { return RationalPoint::affine(BigRat(x), BigRat(y)); }

// Affine points by testing every (x, y) pair; independent of sqrt_mod.
std::int64_t count_by_pairs(const ReducedCurve& e)
{
    const std::int64_t l = e.a.modulus();
    std::int64_t n = 1;
    for (std::int64_t x = 0; x < l; ++x) {
        for (std::int64_t y = 0; y < l; ++y) {
            n += on_curve(e, ReducedPoint::affine(ResidueInt(x, l), ResidueInt(y, l))) ? 1 : 0;
        }
    }
    return n;
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

} // namespace

TEST_CASE("group law over Q")
{
    const auto e = curve_ab(0, 1);
    CHECK(e.add(pt(2, 3), RationalPoint::at_infinity()) == pt(2, 3));
    CHECK(e.mul(2, pt(2, 3)) == pt(0, 1));
    CHECK(e.add(pt(2, 3), pt(-1, 0)) == pt(0, -1));
    CHECK(e.add(pt(-1, 0), pt(-1, 0)).infinity);
    CHECK(e.mul(6, pt(2, 3)).infinity);
    CHECK(e.mul(-1, pt(2, 3)) == pt(2, -3));
    CHECK_THROWS_AS(curve_ab(-3, 2), DomainError);
}

TEST_CASE("group axioms on random rational points")
{
    // y^2 = x^3 - 2 has the point (3, 5) of infinite order
    const auto c = RationalCurve(BigRat(0), BigRat(-2));
    const auto g = pt(3, 5);
    std::vector<RationalPoint> pts;
    for (int k = -3; k <= 3; ++k) {
        pts.push_back(c.mul(k, g));
    }
    for (const auto& p : pts) {
        CHECK(c.contains(p));
        CHECK(c.add(c.neg(p), p).infinity);
        for (const auto& q : pts) {
            CHECK(c.add(p, q) == c.add(q, p));
            for (const auto& r : pts) {
                CHECK(c.add(c.add(p, q), r) == c.add(p, c.add(q, r)));
            }
        }
    }
}

TEST_CASE("group axioms and Lagrange over F_l")
{
    std::mt19937_64 rng(4);
    for (const std::int64_t l : {5, 7, 11, 101, 1009, 65537}) {
        for (int t = 0; t < 5; ++t) {
            const ReducedCurve e{ResidueInt(static_cast<std::int64_t>(rng() % 1000), l),
                                 ResidueInt(static_cast<std::int64_t>(rng() % 1000), l)};
            const auto disc = ResidueInt(4, l) * e.a * e.a * e.a + ResidueInt(27, l) * e.b * e.b;
            if (disc.is_zero()) {
                continue;
            }
            const std::int64_t n = count_points(e);
            for (int i = 0; i < 10; ++i) {
                const auto p = random_point(e, rng);
                const auto q = random_point(e, rng);
                const auto r = random_point(e, rng);
                CHECK(on_curve(e, add(e, p, q)));
                CHECK(add(e, p, q) == add(e, q, p));
                CHECK(add(e, add(e, p, q), r) == add(e, p, add(e, q, r)));
                CHECK(add(e, neg(e, p), p).infinity);
                CHECK(scalar_mul(e, n, p).infinity);
            }
        }
    }
}

TEST_CASE("point counting")
{
    const auto e = reduce_curve(curve_ab(0, 1), 5);
    CHECK(count_points(e) == 6);
    CHECK(count_points(reduce_curve(curve_ab(-1, 0), 3)) == 4);
    CHECK(enumerate_points(e).size() == 6);

    std::mt19937_64 rng(8);
    for (const auto l : prime_sieve(200)) {
        if (l == 2) {
            continue;
        }
        const ReducedCurve c{ResidueInt(static_cast<std::int64_t>(rng() % 1000), l),
                             ResidueInt(static_cast<std::int64_t>(rng() % 1000), l)};
        if ((ResidueInt(4, l) * c.a * c.a * c.a + ResidueInt(27, l) * c.b * c.b).is_zero()) {
            continue;
        }
        const std::int64_t n = count_points(c);
        CHECK(n == count_by_pairs(c));
        CHECK(static_cast<std::int64_t>(enumerate_points(c).size()) == n);
        CHECK((n - l - 1) * (n - l - 1) <= 4 * l);
    }
    CHECK_THROWS_AS(count_points(ReducedCurve{ResidueInt(1, 1000003), ResidueInt(1, 1000003)}), LimitExceeded);
}

TEST_CASE("reduction")
{
    const auto e = curve_ab(0, 1);
    CHECK(reduce_at(e, RationalPoint::at_infinity(), 5).infinity);
    CHECK(reduce_at(e, pt(2, 3), 5) == ReducedPoint::affine(ResidueInt(2, 5), ResidueInt(3, 5)));
    CHECK_THROWS_AS(reduce_at(e, pt(2, 3), 3), BadReduction);
    CHECK_THROWS_AS(reduce_at(e, pt(2, 3), 2), DomainError);

    // y^2 = x^3 - 2 at (3, 5): 2P has x = 129/100
    const auto c = RationalCurve(BigRat(0), BigRat(-2));
    const auto twice = c.mul(2, pt(3, 5));
    CHECK(twice.x == BigRat(BigInt(129), BigInt(100)));
    CHECK(reduce_at(c, twice, 5).infinity);

    // reduction is a homomorphism
    for (const std::int64_t l : {5, 7, 11, 13, 17, 19, 23}) {
        const auto rc = reduce_curve(c, l);
        for (int i = -4; i <= 4; ++i) {
            for (int j = -4; j <= 4; ++j) {
                const auto p = c.mul(i, pt(3, 5));
                const auto q = c.mul(j, pt(3, 5));
                CHECK(reduce_at(c, c.add(p, q), l) == add(rc, reduce_at(c, p, l), reduce_at(c, q, l)));
            }
        }
    }
}

TEST_CASE("integral model")
{
    const RationalCurve c(BigRat(BigInt(1), BigInt(4)), BigRat(BigInt(1), BigInt(64)));
    CHECK(c.scale() == 2);
    CHECK(c.integral_a() == 4);
    CHECK(c.integral_b() == 1);
    const auto p = RationalPoint::affine(BigRat(0), BigRat(BigInt(1), BigInt(8)));
    CHECK(c.contains(p));
    CHECK(c.to_integral_model(p) == pt(0, 1));
    CHECK(c.from_integral_model(pt(0, 1)) == p);
}

TEST_CASE("torsion subgroups")
{
    const auto t1 = torsion_subgroup(curve_ab(0, 1));
    CHECK(t1 == std::vector<RationalPoint>{RationalPoint::at_infinity(), pt(-1, 0), pt(0, -1), pt(0, 1), pt(2, -3), pt(2, 3)});
    CHECK(torsion_subgroup(curve_ab(0, -2)).size() == 1);
    const auto t3 = torsion_subgroup(curve_ab(-1, 0));
    CHECK(t3 == std::vector<RationalPoint>{RationalPoint::at_infinity(), pt(-1, 0), pt(0, 0), pt(1, 0)});

    // y^2 = x^3 - 43x + 166 has Z/7 torsion
    const auto t7 = torsion_subgroup(curve_ab(-43, 166));
    CHECK(t7.size() == 7);
    // closure
    const auto c = curve_ab(-43, 166);
    for (const auto& p : t7) {
        CHECK(std::find(t7.begin(), t7.end(), c.neg(p)) != t7.end());
        for (const auto& q : t7) {
            CHECK(std::find(t7.begin(), t7.end(), c.add(p, q)) != t7.end());
        }
    }
    CHECK(torsion_order(curve_ab(0, 1), pt(2, 3)) == 6);
    CHECK(torsion_order(curve_ab(0, -2), pt(3, 5)) == 0);
}

TEST_CASE("parsing")
{
    const auto c = parse_curve("a=0 b=1");
    CHECK(c == curve_ab(0, 1));
    CHECK(format_curve(parse_curve("a=-3/6 b=2/1")) == "a=-1/2 b=2");
    CHECK(parse_point("x=2 y=3", c) == pt(2, 3));
    CHECK(parse_point("inf", c).infinity);
    CHECK(format_point(pt(2, -3)) == "x=2 y=-3");
    CHECK_THROWS_AS(parse_point("x=2 y=4", c), ParseError);
    CHECK_THROWS_AS(parse_curve("a=0"), ParseError);
    CHECK_THROWS_AS(parse_curve("a=1/0 b=1"), ParseError);
    CHECK_THROWS_AS(parse_curve("a=0.5 b=1"), ParseError);
    CHECK_THROWS_AS(parse_curve("a=-3 b=2"), ParseError);
}
