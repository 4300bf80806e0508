#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lgd/elliptic.hpp"
#include "lgd/factor.hpp"
#include "lgd/polynomial.hpp"

namespace lgd {

/// psi_m in y-free form: psi_m = poly(x) for odd m and psi_m = y * poly(x)
/// for even m, using y^2 = x^3 + a x + b.
template <typename Scalar>
struct DivisionPolynomial {
    int index = 0;
    Polynomial<Scalar> poly;
    bool has_y_factor = false;
};

/// Memoised division polynomials of one curve.
template <typename Scalar>
class DivisionPolynomials {
public:
    explicit DivisionPolynomials(WeierstrassCurve<Scalar> curve) : curve_(std::move(curve)) {}

    const DivisionPolynomial<Scalar>& operator()(int m)
    {
        if (m < 0) {
            throw DomainError("division polynomial index must be non-negative");
        }
        if (auto it = cache_.find(m); it != cache_.end()) {
            return it->second;
        }
        DivisionPolynomial<Scalar> out{m, compute(m), m % 2 == 0};
        return cache_.emplace(m, std::move(out)).first->second;
    }

    /// x^3 + a x + b
    [[nodiscard]] Polynomial<Scalar> rhs() const
    {
        const Scalar one = field_constant(curve_.a, 1);
        const Scalar zero = field_constant(curve_.a, 0);
        return Polynomial<Scalar>({curve_.b, curve_.a, zero, one});
    }

    /// Numerator and denominator of x(m P) as polynomials in x(P):
    /// x(mP) = (x psi_m^2 - psi_{m-1} psi_{m+1}) / psi_m^2.
    std::pair<Polynomial<Scalar>, Polynomial<Scalar>> multiplication_map(int m)
    {
        if (m < 1) {
            throw DomainError("multiplier must be positive");
        }
        const Polynomial<Scalar> f = rhs();
        const Polynomial<Scalar> x({field_constant(curve_.a, 0), field_constant(curve_.a, 1)});
        const auto& pm = (*this)(m).poly;
        const auto& below = (*this)(m - 1).poly;
        const auto& above = (*this)(m + 1).poly;
        if (m % 2 == 0) {
            const Polynomial<Scalar> den = f * pm * pm;
            return {x * den - below * above, den};
        }
        const Polynomial<Scalar> den = pm * pm;
        return {x * den - f * below * above, den};
    }

private:
    Polynomial<Scalar> compute(int m)
    {
        const Scalar& a = curve_.a;
        const Scalar& b = curve_.b;
        auto k = [&](int v) { return field_constant(a, v); };
        switch (m) {
        case 0:
            return {};
        case 1:
            return Polynomial<Scalar>::constant(k(1));
        case 2:
            return Polynomial<Scalar>::constant(k(2));
        case 3:
            return Polynomial<Scalar>({-(a * a), k(12) * b, k(6) * a, k(0), k(3)});
        case 4:
            return k(4) * Polynomial<Scalar>({-(k(8) * b * b) - a * a * a, -(k(4) * a * b), -(k(5) * a * a),
                                              k(20) * b, k(5) * a, k(0), k(1)});
        default:
            break;
        }
        const Polynomial<Scalar> f = rhs();
        const Polynomial<Scalar> f2 = f * f;
        const int h = m / 2;
        if (m % 2 == 1) {
            const auto& p_hp2 = (*this)(h + 2).poly;
            const auto& p_h = (*this)(h).poly;
            const auto& p_hm1 = (*this)(h - 1).poly;
            const auto& p_hp1 = (*this)(h + 1).poly;
            const auto first = p_hp2 * p_h * p_h * p_h;
            const auto second = p_hm1 * p_hp1 * p_hp1 * p_hp1;
            if (h % 2 == 0) {
                return f2 * first - second;
            }
            return first - f2 * second;
        }
        const auto& p_h = (*this)(h).poly;
        const auto& p_hp2 = (*this)(h + 2).poly;
        const auto& p_hm1 = (*this)(h - 1).poly;
        const auto& p_hm2 = (*this)(h - 2).poly;
        const auto& p_hp1 = (*this)(h + 1).poly;
        const auto bracket = p_hp2 * p_hm1 * p_hm1 - p_hm2 * p_hp1 * p_hp1;
        const Scalar half = k(1) / k(2);
        return half * (p_h * bracket);
    }

    WeierstrassCurve<Scalar> curve_;
    std::map<int, DivisionPolynomial<Scalar>> cache_;
};

/// psi_m of a rational curve.
DivisionPolynomial<BigRat> division_polynomial(const RationalCurve& curve, int m);

/// Rational roots of a nonzero polynomial, sorted, without multiplicity.
///
/// Reduces modulo a prime l where the squarefree part stays squarefree, lifts
/// each root in F_l by Newton iteration to a precision l^K > 2 |c_0| |lead|
/// and recovers the rational by bounded rational reconstruction. Every
/// candidate is confirmed by exact evaluation. The result is complete: a root
/// r/s in lowest terms has s | lead and r | c_0, so it reduces to a simple root
/// mod l and is recovered.
std::vector<BigRat> rational_roots(const Polynomial<BigRat>& f);

/// The same set via the rational root theorem: every r/s with s | lead and
/// r | c_0, filtered modulo three auxiliary primes and confirmed exactly.
/// nullopt when factoring the coefficients exceeds the budget.
std::optional<std::vector<BigRat>> rational_roots_by_divisors(const Polynomial<BigRat>& f,
                                                              const FactorBudget& budget = {});

} // namespace lgd
