#include "lgd/lattice.hpp"

#include <optional>

namespace lgd {

namespace {

struct Xgcd {
    BigInt g, s, t;
};

Xgcd xgcd(const BigInt& a, const BigInt& b)
{
    BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        return {-old_r, -old_s, -old_t};
    }
    return {old_r, old_s, old_t};
}

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        q -= 1;
    }
    return q;
}

/// Column Hermite form of a k x m matrix of full row rank; returns k x k.
IntMat column_hermite(IntMat a)
{
    const Eigen::Index k = a.rows();
    const Eigen::Index m = a.cols();
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            if (a(i, j) == 0) {
                continue;
            }
            if (a(i, i) == 0) {
                a.col(i).swap(a.col(j));
                continue;
            }
            const Xgcd e = xgcd(a(i, i), a(i, j));
            const BigInt ci = a(i, i) / e.g;
            const BigInt cj = a(i, j) / e.g;
            const IntVec left = a.col(i);
            const IntVec right = a.col(j);
            a.col(i) = e.s * left + e.t * right;
            a.col(j) = ci * right - cj * left;
        }
        if (a(i, i) == 0) {
            throw DomainError("lattice is not of full rank");
        }
        if (a(i, i) < 0) {
            a.col(i) = -a.col(i);
        }
        for (Eigen::Index j = 0; j < i; ++j) {
            const BigInt q = floor_div(a(i, j), a(i, i));
            if (q != 0) {
                a.col(j) -= q * a.col(i);
            }
        }
    }
    return a.leftCols(k);
}

} // namespace

IntMat inverse_unimodular(const IntMat& m)
{
    const Eigen::Index n = m.rows();
    Mat<BigRat> a(n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = BigRat(m(i, j));
            a(i, n + j) = BigRat(i == j ? 1 : 0);
        }
    }
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index piv = c;
        while (piv < n && a(piv, c) == 0) {
            ++piv;
        }
        if (piv == n) {
            throw NotInvertible("singular matrix");
        }
        a.row(piv).swap(a.row(c));
        const BigRat inv = 1 / a(c, c);
        a.row(c) *= inv;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r != c && a(r, c) != 0) {
                const BigRat f = a(r, c);
                a.row(r) -= f * a.row(c);
            }
        }
    }
    IntMat out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const BigRat& x = a(i, n + j);
            if (denominator(x) != 1) {
                throw NotInvertible("matrix is not unimodular");
            }
            out(i, j) = numerator(x);
        }
    }
    return out;
}

IntMat integer_kernel(const IntMat& f)
{
    const auto snf = smith_normal_form(f);
    const auto r = static_cast<Eigen::Index>(snf.rank());
    return snf.column_transform.rightCols(f.cols() - r);
}

Submodule Submodule::span(const IntMat& generators, std::int64_t modulus)
{
    if (modulus < 1) {
        throw DomainError("modulus must be positive");
    }
    const Eigen::Index k = generators.rows();
    IntMat all(k, generators.cols() + k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < generators.cols(); ++j) {
            BigInt x = generators(i, j) % modulus;
            if (x < 0) {
                x += modulus;
            }
            all(i, j) = x;
        }
    }
    all.rightCols(k) = IntMat::Identity(k, k) * BigInt(modulus);
    return Submodule(column_hermite(std::move(all)), modulus);
}

Submodule Submodule::zero(Eigen::Index dimension, std::int64_t modulus)
{
    return span(IntMat(dimension, 0), modulus);
}

Submodule Submodule::whole(Eigen::Index dimension, std::int64_t modulus)
{
    return span(IntMat::Identity(dimension, dimension), modulus);
}

BigInt Submodule::order() const
{
    BigInt total = 1;
    for (Eigen::Index i = 0; i < dimension(); ++i) {
        total *= modulus_;
        total /= basis_(i, i);
    }
    return total;
}

std::optional<IntVec> Submodule::coordinates(const IntVec& v) const
{
    const Eigen::Index k = dimension();
    IntVec rest = v;
    IntVec x(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (rest(i) % basis_(i, i) != 0) {
            return std::nullopt;
        }
        x(i) = rest(i) / basis_(i, i);
        if (x(i) != 0) {
            rest -= x(i) * basis_.col(i);
        }
    }
    return x;
}

bool Submodule::contains(const IntVec& v) const { return coordinates(v).has_value(); }

bool Submodule::contains(const Submodule& other) const
{
    for (Eigen::Index j = 0; j < other.dimension(); ++j) {
        if (!contains(IntVec(other.basis_.col(j)))) {
            return false;
        }
    }
    return true;
}

Submodule Submodule::restrict_preimage(const IntMat& f, const Submodule& target) const
{
    if (f.cols() != dimension() || f.rows() != target.dimension()) {
        throw DomainError("map dimensions do not match");
    }
    const Eigen::Index k = dimension();
    const Eigen::Index r = target.dimension();
    // x = B y with F B y = T z  <=>  [F B | -T] (y, z) = 0
    IntMat system(r, k + r);
    system.leftCols(k) = f * basis_;
    system.rightCols(r) = -target.basis();
    const IntMat kernel = integer_kernel(system);
    const IntMat ys = kernel.topRows(k);
    return span(basis_ * ys, modulus_);
}

Submodule Submodule::intersect(const Submodule& other) const
{
    return restrict_preimage(IntMat::Identity(dimension(), dimension()), other);
}

Submodule Submodule::sum(const Submodule& other) const
{
    IntMat both(dimension(), 2 * dimension());
    both << basis_, other.basis_;
    return span(both, modulus_);
}

BigInt QuotientStructure::order() const
{
    BigInt total = 1;
    for (const auto& d : divisors) {
        total *= d;
    }
    return total;
}

QuotientStructure quotient(const Submodule& big, const Submodule& small)
{
    if (!big.contains(small)) {
        throw DomainError("quotient of a module by something it does not contain");
    }
    const Eigen::Index k = big.dimension();
    // small = big * X
    IntMat x(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        IntVec rest = small.basis().col(j);
        for (Eigen::Index i = 0; i < k; ++i) {
            x(i, j) = rest(i) / big.basis()(i, i);
            if (x(i, j) != 0) {
                rest -= x(i, j) * big.basis().col(i);
            }
        }
    }
    const auto snf = smith_normal_form(x);
    const IntMat adapted = big.basis() * inverse_unimodular(snf.row_transform);
    QuotientStructure out;
    std::vector<Eigen::Index> keep;
    for (std::size_t i = 0; i < snf.divisors.size(); ++i) {
        if (snf.divisors[i] != 1) {
            out.divisors.push_back(snf.divisors[i]);
            keep.push_back(static_cast<Eigen::Index>(i));
        }
    }
    out.generators = IntMat(k, static_cast<Eigen::Index>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.generators.col(static_cast<Eigen::Index>(i)) = adapted.col(keep[i]);
    }
    return out;
}

} // namespace lgd
