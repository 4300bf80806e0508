#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lgd/arith.hpp"

namespace lgd {

/// Dense univariate polynomial, coefficients from the constant term up.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Scalar v) { return Polynomial(std::vector<Scalar>{std::move(v)}); }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Scalar>& coeffs() const { return c_; }
    [[nodiscard]] const Scalar& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] const Scalar& leading() const { return c_.back(); }

    [[nodiscard]] Scalar operator()(const Scalar& x) const
    {
        Scalar acc = c_.empty() ? Scalar(x - x) : c_.back();
        for (std::size_t i = c_.size(); i-- > 1;) {
            acc = acc * x + c_[i - 1];
        }
        return acc;
    }

    [[nodiscard]] Polynomial derivative() const
    {
        std::vector<Scalar> d;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d.push_back(c_[i] * scalar_from(c_[i], static_cast<int>(i)));
        }
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q)
    {
        const Polynomial& big = p.c_.size() >= q.c_.size() ? p : q;
        const Polynomial& small = p.c_.size() >= q.c_.size() ? q : p;
        std::vector<Scalar> r = big.c_;
        for (std::size_t i = 0; i < small.c_.size(); ++i) {
            r[i] = r[i] + small.c_[i];
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& p)
    {
        std::vector<Scalar> r;
        r.reserve(p.c_.size());
        for (const auto& v : p.c_) {
            r.push_back(-v);
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q)
    {
        if (p.is_zero() || q.is_zero()) {
            return {};
        }
        std::vector<Scalar> r(p.c_.size() + q.c_.size() - 1, p.c_[0] - p.c_[0]);
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            for (std::size_t j = 0; j < q.c_.size(); ++j) {
                r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
            }
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Scalar& k, const Polynomial& p)
    {
        std::vector<Scalar> r;
        r.reserve(p.c_.size());
        for (const auto& v : p.c_) {
            r.push_back(k * v);
        }
        return Polynomial(std::move(r));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

private:
    static Scalar scalar_from(const Scalar& like, int v);

    void trim()
    {
        while (!c_.empty() && is_zero_scalar(c_.back())) {
            c_.pop_back();
        }
    }
    static bool is_zero_scalar(const Scalar& v);

    std::vector<Scalar> c_;
};

template <>
inline BigRat Polynomial<BigRat>::scalar_from(const BigRat&, int v) { return BigRat(v); }
template <>
inline BigInt Polynomial<BigInt>::scalar_from(const BigInt&, int v) { return BigInt(v); }
template <>
inline ResidueInt Polynomial<ResidueInt>::scalar_from(const ResidueInt& like, int v) { return ResidueInt(v, like.modulus()); }
template <>
inline bool Polynomial<BigRat>::is_zero_scalar(const BigRat& v) { return v == 0; }
template <>
inline bool Polynomial<BigInt>::is_zero_scalar(const BigInt& v) { return v == 0; }
template <>
inline bool Polynomial<ResidueInt>::is_zero_scalar(const ResidueInt& v) { return v.is_zero(); }

/// Coefficient-wise reduction of an integer polynomial modulo m.
Polynomial<ResidueInt> reduce_mod(const Polynomial<BigInt>& f, std::int64_t m);

/// Remainder and quotient over Z/l for prime l; the divisor must be nonzero.
std::pair<Polynomial<ResidueInt>, Polynomial<ResidueInt>> divmod(const Polynomial<ResidueInt>& f,
                                                                 const Polynomial<ResidueInt>& g);
/// Monic gcd over F_l.
Polynomial<ResidueInt> gcd(Polynomial<ResidueInt> f, Polynomial<ResidueInt> g);

/// Primitive integer polynomial with positive leading coefficient and the
/// same roots as f (f nonzero).
Polynomial<BigInt> primitive_part(const Polynomial<BigRat>& f);

} // namespace lgd
