#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "lgd/arith.hpp"

namespace lgd {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Mat<BigInt>;
using IntVec = Vec<BigInt>;

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank.
template <typename Scalar>
struct SmithForm {
    Mat<Scalar> diagonal;
    Mat<Scalar> row_transform;    // U
    Mat<Scalar> column_transform; // V
    /// Nonzero diagonal entries in order; empty for the zero matrix.
    std::vector<Scalar> divisors;

    [[nodiscard]] std::size_t rank() const { return divisors.size(); }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x)
{
    return x < 0 ? Scalar(-x) : x;
}

/// Quotient rounded toward zero; remainders are then |r| < |b|.
template <typename Scalar>
Scalar trunc_div(const Scalar& a, const Scalar& b)
{
    return a / b;
}

template <typename Scalar>
void add_row_multiple(Mat<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& k)
{
    if (k != 0) {
        m.row(dst) -= k * m.row(src);
    }
}

template <typename Scalar>
void add_col_multiple(Mat<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& k)
{
    if (k != 0) {
        m.col(dst) -= k * m.col(src);
    }
}

} // namespace detail

/// Smith normal form over the integers. `Scalar` is a signed integer type
/// (std::int64_t or BigInt). When `track_transforms` is false, U and V are
/// left empty; the diagonal is unchanged.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Mat<Scalar>& input, bool track_transforms = true)
{
    using detail::abs_value;
    const Eigen::Index rows = input.rows();
    const Eigen::Index cols = input.cols();
    Mat<Scalar> a = input;
    Mat<Scalar> u;
    Mat<Scalar> v;
    if (track_transforms) {
        u = Mat<Scalar>::Identity(rows, rows);
        v = Mat<Scalar>::Identity(cols, cols);
    }

    SmithForm<Scalar> out;
    const Eigen::Index steps = std::min(rows, cols);
    bool exhausted = false;
    for (Eigen::Index t = 0; t < steps && !exhausted; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            Eigen::Index pr = -1, pc = -1;
            Scalar best = 0;
            for (Eigen::Index j = t; j < cols; ++j) {
                for (Eigen::Index i = t; i < rows; ++i) {
                    if (a(i, j) != 0 && (pr < 0 || abs_value(a(i, j)) < best)) {
                        best = abs_value(a(i, j));
                        pr = i;
                        pc = j;
                        if (best == 1) {
                            break;
                        }
                    }
                }
                if (best == 1) {
                    break;
                }
            }
            if (pr < 0) {
                exhausted = true;
                break;
            }
            if (pr != t) {
                a.row(pr).swap(a.row(t));
                if (track_transforms) {
                    u.row(pr).swap(u.row(t));
                }
            }
            if (pc != t) {
                a.col(pc).swap(a.col(t));
                if (track_transforms) {
                    v.col(pc).swap(v.col(t));
                }
            }

            bool dirty = false;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) {
                    continue;
                }
                const Scalar q = detail::trunc_div(a(i, t), a(t, t));
                detail::add_row_multiple(a, i, t, q);
                if (track_transforms) {
                    detail::add_row_multiple(u, i, t, q);
                }
                dirty = dirty || a(i, t) != 0;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) {
                    continue;
                }
                const Scalar q = detail::trunc_div(a(t, j), a(t, t));
                detail::add_col_multiple(a, j, t, q);
                if (track_transforms) {
                    detail::add_col_multiple(v, j, t, q);
                }
                dirty = dirty || a(t, j) != 0;
            }
            if (dirty) {
                continue;
            }
            // pivot must divide the whole trailing block
            bool divides_all = true;
            for (Eigen::Index i = t + 1; i < rows && divides_all; ++i) {
                for (Eigen::Index j = t + 1; j < cols; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        a.row(t) += a.row(i);
                        if (track_transforms) {
                            u.row(t) += u.row(i);
                        }
                        divides_all = false;
                        break;
                    }
                }
            }
            if (divides_all) {
                break;
            }
        }
        if (exhausted) {
            break;
        }
        if (a(t, t) < 0) {
            a.row(t) = -a.row(t);
            if (track_transforms) {
                u.row(t) = -u.row(t);
            }
        }
        out.divisors.push_back(a(t, t));
    }
    out.diagonal = std::move(a);
    out.row_transform = std::move(u);
    out.column_transform = std::move(v);
    return out;
}

} // namespace lgd
