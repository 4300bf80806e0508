#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lgd/division.hpp"
#include "lgd/elliptic.hpp"

namespace lgd {

enum class LocalMethod { Structural, BruteForce };

std::string_view to_string(LocalMethod m);

/// Outcome of the residue-field test at one prime l.
struct LocalVerdict {
    std::int64_t ell = 0;
    bool divisible = false;
    LocalMethod method = LocalMethod::Structural;
    /// When present, p^n * witness = red_l(P).
    std::optional<ReducedPoint> witness;
};

/// Decides whether red_l(P) lies in p^n E(F_l).
///
/// Structural: with #E(F_l) = p^a m (p not dividing m), split red(P) into its
/// Sylow-p part and the rest; the rest is always p^n-divisible, and the Sylow
/// part is tested inside G_p, which is built from m-multiples of sampled points
/// (full enumeration if sampling stalls). Brute force: search all of E(F_l).
///
/// Throws BadPrime when l = 2, l is not prime, l = p or l divides the
/// discriminant of the integral model.
LocalVerdict local_divide_test(const RationalCurve& curve, const RationalPoint& point, std::int64_t p, int n,
                               std::int64_t ell, LocalMethod method = LocalMethod::Structural);

/// True when l may be used for local tests of p-divisibility on this curve.
bool admissible_prime(const RationalCurve& curve, std::int64_t p, std::int64_t ell);

enum class GlobalStatus { Divisible, NotDivisible, Inconclusive };

std::string_view to_string(GlobalStatus s);

enum class RootMethod {
    /// Root finding through Hensel lifting (never runs out of budget).
    Lifting,
    /// Rational root theorem; Inconclusive when factoring exceeds the budget.
    Divisors,
};

struct GlobalOptions {
    RootMethod roots = RootMethod::Lifting;
    FactorBudget budget{};
};

struct GlobalOutcome {
    GlobalStatus status = GlobalStatus::Inconclusive;
    /// Every Q in E(Q) with p^n Q = P, sorted (empty unless Divisible).
    std::vector<RationalPoint> preimages;
    /// Set when P is torsion and the finite torsion group decided the question.
    bool via_torsion = false;

    [[nodiscard]] std::optional<RationalPoint> preimage() const
    {
        if (preimages.empty()) {
            return std::nullopt;
        }
        return preimages.front();
    }
};

/// Exact decision of P in p^n E(Q).
///
/// Torsion P is settled inside the torsion subgroup. Otherwise each of the n
/// stages collects all rational Q' with p Q' = R for every R of the previous
/// stage, solving x(p Q') = x(R) as a polynomial equation of degree p^2 and
/// confirming each candidate by exact scalar multiplication.
GlobalOutcome global_divide(const RationalCurve& curve, const RationalPoint& point, std::int64_t p, int n,
                            const GlobalOptions& options = {});

} // namespace lgd
