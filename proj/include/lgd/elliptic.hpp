#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lgd/arith.hpp"

namespace lgd {

/// Short Weierstrass curve y^2 = x^3 + a x + b over a field of scalars
/// (BigRat for Q, ResidueInt for F_l).
template <typename Scalar>
struct WeierstrassCurve {
    Scalar a;
    Scalar b;
};

/// Point at infinity or an affine point (x, y).
template <typename Scalar>
struct CurvePoint {
    bool infinity = true;
    Scalar x{};
    Scalar y{};

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(Scalar x, Scalar y) { return CurvePoint{false, std::move(x), std::move(y)}; }

    bool operator==(const CurvePoint& o) const
    {
        if (infinity || o.infinity) {
            return infinity == o.infinity;
        }
        return x == o.x && y == o.y;
    }
};

inline BigRat field_constant(const BigRat&, int v) { return BigRat(v); }
inline ResidueInt field_constant(const ResidueInt& like, int v) { return ResidueInt(v, like.modulus()); }
inline bool is_zero(const BigRat& v) { return v == 0; }
inline bool is_zero(const ResidueInt& v) { return v.is_zero(); }

template <typename Scalar>
bool on_curve(const WeierstrassCurve<Scalar>& e, const CurvePoint<Scalar>& p)
{
    return p.infinity || p.y * p.y == p.x * p.x * p.x + e.a * p.x + e.b;
}

template <typename Scalar>
CurvePoint<Scalar> neg(const WeierstrassCurve<Scalar>&, const CurvePoint<Scalar>& p)
{
    if (p.infinity) {
        return p;
    }
    return CurvePoint<Scalar>::affine(p.x, -p.y);
}

/// Chord-tangent addition.
template <typename Scalar>
CurvePoint<Scalar> add(const WeierstrassCurve<Scalar>& e, const CurvePoint<Scalar>& p, const CurvePoint<Scalar>& q)
{
    if (p.infinity) {
        return q;
    }
    if (q.infinity) {
        return p;
    }
    Scalar slope;
    if (p.x == q.x) {
        if (is_zero(p.y + q.y)) {
            return CurvePoint<Scalar>::at_infinity();
        }
        slope = (field_constant(p.x, 3) * p.x * p.x + e.a) / (field_constant(p.x, 2) * p.y);
    } else {
        slope = (q.y - p.y) / (q.x - p.x);
    }
    Scalar x3 = slope * slope - p.x - q.x;
    Scalar y3 = slope * (p.x - x3) - p.y;
    return CurvePoint<Scalar>::affine(std::move(x3), std::move(y3));
}

template <typename Scalar>
CurvePoint<Scalar> sub(const WeierstrassCurve<Scalar>& e, const CurvePoint<Scalar>& p, const CurvePoint<Scalar>& q)
{
    return add(e, p, neg(e, q));
}

/// n * P by double-and-add; negative n multiplies -P.
template <typename Scalar>
CurvePoint<Scalar> scalar_mul(const WeierstrassCurve<Scalar>& e, std::int64_t n, const CurvePoint<Scalar>& p)
{
    CurvePoint<Scalar> base = n < 0 ? neg(e, p) : p;
    auto k = static_cast<std::uint64_t>(n < 0 ? -n : n);
    CurvePoint<Scalar> acc = CurvePoint<Scalar>::at_infinity();
    while (k > 0) {
        if (k & 1U) {
            acc = add(e, acc, base);
        }
        k >>= 1U;
        if (k > 0) {
            base = add(e, base, base);
        }
    }
    return acc;
}

using RationalPoint = CurvePoint<BigRat>;
using ReducedCurve = WeierstrassCurve<ResidueInt>;
using ReducedPoint = CurvePoint<ResidueInt>;

/// y^2 = x^3 + a x + b over Q with a, b rational and nonzero discriminant.
///
/// Also carries an integral model y^2 = x^3 + A x + B with A = u^4 a,
/// B = u^6 b for the least u >= 1 making both integral; a point (x, y) maps
/// to (u^2 x, u^3 y) on it.
class RationalCurve {
public:
    /// Throws DomainError when 4a^3 + 27b^2 = 0.
    RationalCurve(BigRat a, BigRat b);

    [[nodiscard]] const BigRat& a() const { return curve_.a; }
    [[nodiscard]] const BigRat& b() const { return curve_.b; }
    [[nodiscard]] const WeierstrassCurve<BigRat>& weierstrass() const { return curve_; }

    [[nodiscard]] const BigInt& scale() const { return u_; }
    [[nodiscard]] const BigInt& integral_a() const { return int_a_; }
    [[nodiscard]] const BigInt& integral_b() const { return int_b_; }
    /// -16 (4A^3 + 27B^2) of the integral model.
    [[nodiscard]] const BigInt& discriminant() const { return disc_; }

    [[nodiscard]] RationalPoint to_integral_model(const RationalPoint& p) const;
    [[nodiscard]] RationalPoint from_integral_model(const RationalPoint& p) const;

    [[nodiscard]] bool contains(const RationalPoint& p) const { return on_curve(curve_, p); }

    RationalPoint add(const RationalPoint& p, const RationalPoint& q) const { return lgd::add(curve_, p, q); }
    RationalPoint neg(const RationalPoint& p) const { return lgd::neg(curve_, p); }
    RationalPoint mul(std::int64_t n, const RationalPoint& p) const { return scalar_mul(curve_, n, p); }

    bool operator==(const RationalCurve& o) const { return curve_.a == o.curve_.a && curve_.b == o.curve_.b; }

private:
    WeierstrassCurve<BigRat> curve_;
    BigInt u_ = 1;
    BigInt int_a_;
    BigInt int_b_;
    BigInt disc_;
};

/// Largest l accepted by point counting and enumeration.
inline constexpr std::int64_t kMaxCountingPrime = 1'000'000;

/// The integral model reduced mod l. Throws DomainError unless l is an odd
/// prime and BadReduction when l divides the discriminant.
ReducedCurve reduce_curve(const RationalCurve& curve, std::int64_t l);

/// Image of P under E(Q) -> E(F_l); a point with l in its denominators goes to
/// infinity.
ReducedPoint reduce_at(const RationalCurve& curve, const RationalPoint& p, std::int64_t l);

/// #E(F_l) = l + 1 + sum_x (x^3 + a x + b / l). Throws LimitExceeded above
/// kMaxCountingPrime.
std::int64_t count_points(const ReducedCurve& curve);

/// Every point of E(F_l), infinity first, then by x and y.
std::vector<ReducedPoint> enumerate_points(const ReducedCurve& curve);

/// Torsion subgroup of E(Q) by Lutz-Nagell on the integral model. A candidate
/// is kept when m * P = infinity for some m <= 12 (Mazur's bound on torsion
/// orders, used as the stopping rule). Infinity first.
std::vector<RationalPoint> torsion_subgroup(const RationalCurve& curve);

/// Order of a torsion point (smallest m <= 12 with m P = infinity), or 0 when
/// P has infinite order.
int torsion_order(const RationalCurve& curve, const RationalPoint& p);

/// Exact rational from "n", "-n" or "n/d".
BigRat parse_rational(std::string_view text);

/// "a=<rat> b=<rat>"
RationalCurve parse_curve(std::string_view text);
std::string format_curve(const RationalCurve& curve);

/// "inf" or "x=<rat> y=<rat>"; the point must lie on `curve`.
RationalPoint parse_point(std::string_view text, const RationalCurve& curve);
RationalPoint parse_point(std::string_view text);
std::string format_point(const RationalPoint& p);
std::string format_point(const ReducedPoint& p);

} // namespace lgd
