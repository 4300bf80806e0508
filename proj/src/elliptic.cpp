#include "lgd/elliptic.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "lgd/factor.hpp"

namespace lgd {

namespace {

BigInt min_scale(const BigInt& den_a, const BigInt& den_b)
{
    if (den_a == 1 && den_b == 1) {
        return 1;
    }
    const auto fa = factorize(den_a);
    const auto fb = factorize(den_b);
    if (!fa || !fb) {
        return lcm(den_a, den_b);
    }
    std::map<BigInt, int> need;
    for (const auto& [r, e] : *fa) {
        need[r] = std::max(need[r], (e + 3) / 4);
    }
    for (const auto& [r, e] : *fb) {
        need[r] = std::max(need[r], (e + 5) / 6);
    }
    BigInt u = 1;
    for (const auto& [r, e] : need) {
        u *= pow(r, static_cast<unsigned>(e));
    }
    return u;
}

BigInt cubic_value(const BigInt& x, const BigInt& a, const BigInt& c) { return x * x * x + a * x + c; }

/// Integer roots of x^3 + a x + c. The cubic is monotone on
/// (-inf, -t-1], [-t, t] and [t+1, inf) with t = isqrt(-a/3), so a binary
/// search on each piece finds every integer root.
std::vector<BigInt> integer_cubic_roots(const BigInt& a, const BigInt& c)
{
    const BigInt bound = 1 + std::max(abs(a), abs(c));
    std::vector<std::pair<BigInt, BigInt>> pieces;
    if (a >= 0) {
        pieces.emplace_back(-bound, bound);
    } else {
        const BigInt t = isqrt(-a / 3);
        pieces.emplace_back(-bound, -t - 1);
        pieces.emplace_back(-t, t);
        pieces.emplace_back(t + 1, bound);
    }
    std::set<BigInt> roots;
    for (const auto& [lo0, hi0] : pieces) {
        if (lo0 > hi0) {
            continue;
        }
        const bool increasing = cubic_value(hi0, a, c) >= cubic_value(lo0, a, c);
        BigInt lo = lo0, hi = hi0;
        while (lo < hi) {
            const BigInt mid = (lo + hi) >= 0 ? (lo + hi) / 2 : -((-(lo + hi) + 1) / 2);
            const BigInt v = cubic_value(mid, a, c);
            if (increasing ? v >= 0 : v <= 0) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        if (cubic_value(lo, a, c) == 0) {
            roots.insert(lo);
        }
    }
    return {roots.begin(), roots.end()};
}

ResidueInt reduce_rational(const BigRat& r, std::int64_t l)
{
    const BigInt num = numerator(r) % l;
    const BigInt den = denominator(r) % l;
    return ResidueInt(num.convert_to<std::int64_t>(), l) / ResidueInt(den.convert_to<std::int64_t>(), l);
}

bool point_less(const RationalPoint& p, const RationalPoint& q)
{
    if (p.infinity || q.infinity) {
        return p.infinity && !q.infinity;
    }
    if (p.x != q.x) {
        return p.x < q.x;
    }
    return p.y < q.y;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

/// Splits "k1=v1 k2=v2" into the two values, in order.
std::pair<std::string_view, std::string_view> two_fields(std::string_view text, std::string_view k1, std::string_view k2)
{
    text = trim(text);
    const auto space = text.find(' ');
    if (space == std::string_view::npos) {
        throw ParseError("expected '" + std::string(k1) + "=... " + std::string(k2) + "=...'");
    }
    const std::string_view first = text.substr(0, space);
    const std::string_view second = trim(text.substr(space + 1));
    auto value = [](std::string_view token, std::string_view key) {
        if (!token.starts_with(key) || token.size() <= key.size() || token[key.size()] != '=') {
            throw ParseError("expected field '" + std::string(key) + "=' in '" + std::string(token) + "'");
        }
        return token.substr(key.size() + 1);
    };
    return {value(first, k1), value(second, k2)};
}

} // namespace

RationalCurve::RationalCurve(BigRat a, BigRat b) : curve_{std::move(a), std::move(b)}
{
    if (4 * curve_.a * curve_.a * curve_.a + 27 * curve_.b * curve_.b == 0) {
        throw DomainError("singular curve: 4a^3 + 27b^2 = 0");
    }
    u_ = min_scale(denominator(curve_.a), denominator(curve_.b));
    const BigRat ia = curve_.a * BigRat(pow(u_, 4));
    const BigRat ib = curve_.b * BigRat(pow(u_, 6));
    int_a_ = numerator(ia);
    int_b_ = numerator(ib);
    disc_ = -16 * (4 * int_a_ * int_a_ * int_a_ + 27 * int_b_ * int_b_);
}

RationalPoint RationalCurve::to_integral_model(const RationalPoint& p) const
{
    if (p.infinity) {
        return p;
    }
    const BigRat u(u_);
    return RationalPoint::affine(p.x * u * u, p.y * u * u * u);
}

RationalPoint RationalCurve::from_integral_model(const RationalPoint& p) const
{
    if (p.infinity) {
        return p;
    }
    const BigRat u(u_);
    return RationalPoint::affine(p.x / (u * u), p.y / (u * u * u));
}

ReducedCurve reduce_curve(const RationalCurve& curve, std::int64_t l)
{
    if (l < 3 || !is_prime(l)) {
        throw DomainError("reduction needs an odd prime, got " + std::to_string(l));
    }
    if (curve.discriminant() % l == 0) {
        throw BadReduction("bad reduction at " + std::to_string(l));
    }
    const BigInt a = curve.integral_a() % l;
    const BigInt b = curve.integral_b() % l;
    return ReducedCurve{ResidueInt(a.convert_to<std::int64_t>(), l), ResidueInt(b.convert_to<std::int64_t>(), l)};
}

ReducedPoint reduce_at(const RationalCurve& curve, const RationalPoint& p, std::int64_t l)
{
    (void)reduce_curve(curve, l);
    if (p.infinity) {
        return ReducedPoint::at_infinity();
    }
    const RationalPoint q = curve.to_integral_model(p);
    if (denominator(q.x) % l == 0) {
        return ReducedPoint::at_infinity();
    }
    return ReducedPoint::affine(reduce_rational(q.x, l), reduce_rational(q.y, l));
}

std::int64_t count_points(const ReducedCurve& curve)
{
    const std::int64_t l = curve.a.modulus();
    if (l > kMaxCountingPrime) {
        throw LimitExceeded("point counting is capped at l <= " + std::to_string(kMaxCountingPrime));
    }
    const std::int64_t a = curve.a.value();
    const std::int64_t b = curve.b.value();
    std::int64_t total = l + 1;
    for (std::int64_t x = 0; x < l; ++x) {
        const std::int64_t rhs = (mul_mod(mul_mod(x, x, l), x, l) + mul_mod(a, x, l) + b) % l;
        total += legendre_symbol(rhs, l);
    }
    return total;
}

std::vector<ReducedPoint> enumerate_points(const ReducedCurve& curve)
{
    const std::int64_t l = curve.a.modulus();
    if (l > kMaxCountingPrime) {
        throw LimitExceeded("point enumeration is capped at l <= " + std::to_string(kMaxCountingPrime));
    }
    std::vector<ReducedPoint> points{ReducedPoint::at_infinity()};
    for (std::int64_t x = 0; x < l; ++x) {
        const ResidueInt rx(x, l);
        const ResidueInt rhs = rx * rx * rx + curve.a * rx + curve.b;
        const auto root = sqrt_mod(rhs);
        if (!root) {
            continue;
        }
        points.push_back(ReducedPoint::affine(rx, *root));
        if (!root->is_zero()) {
            points.push_back(ReducedPoint::affine(rx, -*root));
        }
    }
    return points;
}

int torsion_order(const RationalCurve& curve, const RationalPoint& p)
{
    RationalPoint acc = p;
    for (int m = 1; m <= 12; ++m) {
        if (acc.infinity) {
            return m;
        }
        acc = curve.add(acc, p);
    }
    return 0;
}

std::vector<RationalPoint> torsion_subgroup(const RationalCurve& curve)
{
    const WeierstrassCurve<BigRat> model{BigRat(curve.integral_a()), BigRat(curve.integral_b())};
    const BigInt& a = curve.integral_a();
    const BigInt& b = curve.integral_b();
    const BigInt d = 4 * a * a * a + 27 * b * b;

    std::vector<BigInt> ys{0};
    FactorBudget budget;
    budget.rho_iterations = 5'000'000;
    const auto factors = factorize(d, budget);
    if (!factors) {
        throw LimitExceeded("cannot factor the discriminant for the Lutz-Nagell search");
    }
    std::vector<BigInt> square_roots{1};
    for (const auto& [r, e] : *factors) {
        const std::size_t current = square_roots.size();
        BigInt power = 1;
        for (int k = 1; 2 * k <= e; ++k) {
            power *= r;
            for (std::size_t i = 0; i < current; ++i) {
                square_roots.push_back(square_roots[i] * power);
            }
        }
    }
    ys.insert(ys.end(), square_roots.begin(), square_roots.end());

    std::vector<RationalPoint> out{RationalPoint::at_infinity()};
    for (const auto& y : ys) {
        for (const auto& x : integer_cubic_roots(a, b - y * y)) {
            for (const int sign : {1, -1}) {
                if (y == 0 && sign == -1) {
                    continue;
                }
                const RationalPoint cand = RationalPoint::affine(BigRat(x), BigRat(sign * y));
                RationalPoint acc = cand;
                bool torsion = false;
                for (int m = 1; m <= 12; ++m) {
                    if (acc.infinity) {
                        torsion = true;
                        break;
                    }
                    if (denominator(acc.x) != 1) {
                        break;
                    }
                    acc = add(model, acc, cand);
                }
                if (torsion) {
                    out.push_back(curve.from_integral_model(cand));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

BigRat parse_rational(std::string_view text)
{
    text = trim(text);
    auto integer = [](std::string_view s) {
        if (s.empty()) {
            throw ParseError("empty number");
        }
        std::string_view digits = s;
        if (digits.front() == '-' || digits.front() == '+') {
            digits.remove_prefix(1);
        }
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ParseError("not an integer: '" + std::string(s) + "'");
        }
        return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRat(integer(text));
    }
    const BigInt den = integer(text.substr(slash + 1));
    if (den == 0) {
        throw ParseError("zero denominator");
    }
    return BigRat(integer(text.substr(0, slash)), den);
}

RationalCurve parse_curve(std::string_view text)
{
    const auto [a, b] = two_fields(text, "a", "b");
    try {
        return RationalCurve(parse_rational(a), parse_rational(b));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string format_curve(const RationalCurve& curve)
{
    return "a=" + to_string(curve.a()) + " b=" + to_string(curve.b());
}

RationalPoint parse_point(std::string_view text)
{
    if (trim(text) == "inf") {
        return RationalPoint::at_infinity();
    }
    const auto [x, y] = two_fields(text, "x", "y");
    return RationalPoint::affine(parse_rational(x), parse_rational(y));
}

RationalPoint parse_point(std::string_view text, const RationalCurve& curve)
{
    RationalPoint p = parse_point(text);
    if (!curve.contains(p)) {
        throw ParseError("point " + std::string(text) + " is not on the curve");
    }
    return p;
}

std::string format_point(const RationalPoint& p)
{
    if (p.infinity) {
        return "inf";
    }
    return "x=" + to_string(p.x) + " y=" + to_string(p.y);
}

std::string format_point(const ReducedPoint& p)
{
    if (p.infinity) {
        return "inf";
    }
    return "x=" + std::to_string(p.x.value()) + " y=" + std::to_string(p.y.value());
}

} // namespace lgd
