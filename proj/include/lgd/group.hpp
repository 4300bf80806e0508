#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "lgd/errors.hpp"

namespace lgd {

/// Integer matrix with entries reduced into [0, q).
using ModMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

ModMat reduce_matrix(const ModMat& m, std::int64_t modulus);
ModMat multiply_mod(const ModMat& a, const ModMat& b, std::int64_t modulus);

/// Largest group built by closure.
inline constexpr std::size_t kMaxGroupOrder = 100'000;

/// Finite group given by its multiplication table on indices 0..g-1.
class FiniteGroupTable {
public:
    /// Checks closure, identity, inverses and associativity (every triple for
    /// g <= 64, a fixed sample of triples above). Throws DomainError.
    explicit FiniteGroupTable(std::vector<std::vector<int>> table);

    static FiniteGroupTable trivial();
    static FiniteGroupTable cyclic(int m);

    [[nodiscard]] int order() const { return static_cast<int>(table_.size()); }
    [[nodiscard]] int identity() const { return identity_; }
    [[nodiscard]] int mul(int a, int b) const { return table_[a][b]; }
    [[nodiscard]] int inverse(int a) const { return inverse_[a]; }
    [[nodiscard]] int power(int a, std::int64_t k) const;
    [[nodiscard]] int element_order(int a) const;
    [[nodiscard]] const std::vector<std::vector<int>>& table() const { return table_; }

    /// Sorted elements of the subgroup generated by `gens`.
    [[nodiscard]] std::vector<int> generated(const std::vector<int>& gens) const;

    /// A generating set of the subgroup `elements`, chosen greedily.
    [[nodiscard]] std::vector<int> generators_of(const std::vector<int>& elements) const;
    [[nodiscard]] std::vector<int> generators() const;

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

/// Group generated by invertible r x r matrices mod q, with the matrix of each
/// element (element 0 is the identity matrix).
struct MatrixGroup {
    FiniteGroupTable group;
    std::vector<ModMat> elements;
    std::int64_t modulus = 1;
};

/// Closure of the generators under multiplication. Throws DomainError for
/// non-square or non-invertible input and LimitExceeded beyond `cap` elements.
MatrixGroup matrix_group(const std::vector<ModMat>& generators, std::int64_t modulus,
                         std::size_t cap = kMaxGroupOrder);

/// "[[1,1],[0,1]];[[2,0],[0,1]]" -> matrices. Throws ParseError.
std::vector<ModMat> parse_matrices(std::string_view text);

struct Subgroup {
    /// Sorted element indices.
    std::vector<int> elements;
    /// An element generating it, for cyclic subgroups.
    int generator = 0;
};

/// Every cyclic subgroup <g>, once each, ordered by (order, elements). With
/// p_only only those of p-power order.
std::vector<Subgroup> cyclic_subgroups(const FiniteGroupTable& g, bool p_only = false, std::int64_t p = 0);

/// A Sylow p-subgroup, grown from {1} inside normalizers.
std::vector<int> sylow_subgroup(const FiniteGroupTable& g, std::int64_t p);

/// True when the Sylow p-subgroup has an element of full order.
bool sylow_is_cyclic(const FiniteGroupTable& g, std::int64_t p);

} // namespace lgd
