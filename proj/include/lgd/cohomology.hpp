#pragma once

#include <cstdint>
#include <vector>

#include "lgd/group.hpp"
#include "lgd/lattice.hpp"

namespace lgd {

/// M = (Z/p^n)^r with G acting through one r x r matrix per element.
class GModule {
public:
    /// Checks rho(1) = I, rho(a b) = rho(a) rho(b) and invertibility mod p.
    GModule(FiniteGroupTable group, std::int64_t p, int n, std::vector<ModMat> action);

    /// The natural action of a matrix group on (Z/q)^r, q = p^n.
    static GModule natural(const MatrixGroup& g, std::int64_t p, int n);
    /// Every element acting as the identity on (Z/p^n)^r.
    static GModule trivial(FiniteGroupTable group, std::int64_t p, int n, int rank = 1);

    [[nodiscard]] const FiniteGroupTable& group() const { return group_; }
    [[nodiscard]] std::int64_t p() const { return p_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::int64_t modulus() const { return q_; }
    [[nodiscard]] int rank() const { return r_; }
    [[nodiscard]] const ModMat& action(int element) const { return action_[element]; }

private:
    FiniteGroupTable group_;
    std::int64_t p_;
    int n_;
    std::int64_t q_;
    int r_;
    std::vector<ModMat> action_;
};

/// A map G -> M, one column per group element.
using Cocycle = ModMat;

bool is_cocycle(const GModule& m, const Cocycle& c);

/// Cocycles and coboundaries of one (G, M), written in the coordinates of the
/// values c(s) on a generating set S of G (r |S| coordinates mod q).
class CocycleSpace {
public:
    explicit CocycleSpace(const GModule& m);

    [[nodiscard]] const GModule& module() const { return *m_; }
    [[nodiscard]] const std::vector<int>& generators() const { return gens_; }
    [[nodiscard]] const Submodule& cocycles() const { return z1_; }
    [[nodiscard]] const Submodule& coboundaries() const { return b1_; }

    /// Integer matrix T_g with c(g) = T_g v for the cocycle of coordinates v.
    [[nodiscard]] const IntMat& evaluation(int element) const { return eval_[element]; }
    /// The full cocycle of coordinates v.
    [[nodiscard]] Cocycle expand(const IntVec& v) const;

    /// Cocycles whose restriction to the subgroup generated by `gens` is a
    /// coboundary there.
    [[nodiscard]] Submodule locally_trivial(const std::vector<int>& gens) const;

private:
    const GModule* m_;
    std::vector<int> gens_;
    std::vector<IntMat> eval_;
    Submodule z1_;
    Submodule b1_;
};

struct CohomologyResult {
    /// Invariant factors of the group, each dividing the next (powers of p).
    std::vector<BigInt> divisors;
    /// One cocycle per divisor, of that order in the group.
    std::vector<Cocycle> generators;
    /// The cocycles representing this group (contains B^1).
    Submodule cocycles = Submodule::zero(0, 1);

    [[nodiscard]] BigInt order() const;
};

/// Z^1 as a submodule, with explicit generating cocycles.
CohomologyResult cocycle_space(const GModule& m);
/// B^1 inside Z^1.
CohomologyResult coboundary_space(const GModule& m);
/// H^1(G, M) = Z^1 / B^1.
CohomologyResult h1(const GModule& m);
/// Classes restricting to coboundaries on every cyclic subgroup (every cyclic
/// p-subgroup with p_only).
CohomologyResult h1_loc(const GModule& m, bool p_only = false);

/// h1_loc over all cyclic subgroups equals h1_loc over cyclic p-subgroups.
bool check_p_cyclic_equivalence(const GModule& m);
/// Restriction H^1(G, M) -> H^1(P, M) to a Sylow p-subgroup has trivial kernel.
bool check_sylow_injectivity(const GModule& m);

} // namespace lgd
