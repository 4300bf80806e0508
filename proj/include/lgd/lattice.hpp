#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgd/smith.hpp"

namespace lgd {

/// Inverse of a unimodular integer matrix (Gauss-Jordan over the rationals).
IntMat inverse_unimodular(const IntMat& m);

/// Integer solutions of F x = 0, as the columns of a basis matrix.
IntMat integer_kernel(const IntMat& f);

/// Z/q-submodule of (Z/q)^k.
///
/// Stored as the integer lattice L with qZ^k <= L <= Z^k, through the column
/// Hermite basis of L (lower triangular, positive diagonal, entries left of the
/// diagonal reduced modulo it). The basis is canonical, so equality of
/// submodules is equality of bases.
class Submodule {
public:
    /// Submodule generated by the columns of `generators` (k rows).
    static Submodule span(const IntMat& generators, std::int64_t modulus);
    static Submodule zero(Eigen::Index dimension, std::int64_t modulus);
    static Submodule whole(Eigen::Index dimension, std::int64_t modulus);

    [[nodiscard]] const IntMat& basis() const { return basis_; }
    [[nodiscard]] Eigen::Index dimension() const { return basis_.rows(); }
    [[nodiscard]] std::int64_t modulus() const { return modulus_; }

    /// Number of elements of the submodule, q^k / det(L).
    [[nodiscard]] BigInt order() const;

    [[nodiscard]] bool contains(const IntVec& v) const;
    [[nodiscard]] bool contains(const Submodule& other) const;

    /// { x in this : F x in target }, with F : Z^k -> Z^r.
    [[nodiscard]] Submodule restrict_preimage(const IntMat& f, const Submodule& target) const;
    [[nodiscard]] Submodule intersect(const Submodule& other) const;
    /// this + other
    [[nodiscard]] Submodule sum(const Submodule& other) const;

    bool operator==(const Submodule& o) const
    {
        return modulus_ == o.modulus_ && basis_ == o.basis_;
    }

private:
    Submodule(IntMat basis, std::int64_t modulus) : basis_(std::move(basis)), modulus_(modulus) {}

    /// Coordinates of v in the basis, if v lies in the lattice.
    [[nodiscard]] std::optional<IntVec> coordinates(const IntVec& v) const;

    IntMat basis_;
    std::int64_t modulus_ = 1;
};

/// Structure of big / small for submodules small <= big.
struct QuotientStructure {
    /// Invariant factors > 1, each dividing the next.
    std::vector<BigInt> divisors;
    /// One representative in Z^k per invariant factor, column i of order divisors[i].
    IntMat generators;

    [[nodiscard]] BigInt order() const;
};

QuotientStructure quotient(const Submodule& big, const Submodule& small);

} // namespace lgd
