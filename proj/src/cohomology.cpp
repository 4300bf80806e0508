#include "lgd/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lgd {

namespace {

IntMat to_int(const ModMat& m)
{
    IntMat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(i, j) = m(i, j);
        }
    }
    return out;
}

IntMat reduce(IntMat m, std::int64_t q)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) %= q;
            if (m(i, j) < 0) {
                m(i, j) += q;
            }
        }
    }
    return m;
}

bool is_zero_mod(const IntMat& m, std::int64_t q)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) % q != 0) {
                return false;
            }
        }
    }
    return true;
}

/// Columns (rho(s) - 1) e_j for s in gens, stacked block by block.
IntMat coboundary_generators(const GModule& m, const std::vector<int>& gens)
{
    const int r = m.rank();
    IntMat out = IntMat::Zero(r * static_cast<Eigen::Index>(gens.size()), r);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const IntMat d = to_int(m.action(gens[i])) - IntMat::Identity(r, r);
        out.middleRows(static_cast<Eigen::Index>(i) * r, r) = d;
    }
    return out;
}

} // namespace

GModule::GModule(FiniteGroupTable group, std::int64_t p, int n, std::vector<ModMat> action)
    : group_(std::move(group)), p_(p), n_(n), q_(0), r_(0), action_(std::move(action))
{
    if (p < 2 || !is_prime(p) || n < 1) {
        throw DomainError("module needs a prime p and n >= 1");
    }
    q_ = checked_pow(p, static_cast<unsigned>(n));
    if (static_cast<int>(action_.size()) != group_.order()) {
        throw DomainError("one action matrix per group element is required");
    }
    r_ = static_cast<int>(action_.front().rows());
    for (auto& a : action_) {
        if (a.rows() != r_ || a.cols() != r_) {
            throw DomainError("action matrices must be square of the module rank");
        }
        a = reduce_matrix(a, q_);
    }
    if (action_[group_.identity()] != ModMat::Identity(r_, r_)) {
        throw DomainError("identity must act trivially");
    }
    for (int a = 0; a < group_.order(); ++a) {
        for (int b = 0; b < group_.order(); ++b) {
            if (multiply_mod(action_[a], action_[b], q_) != action_[group_.mul(a, b)]) {
                throw DomainError("action is not a homomorphism");
            }
        }
    }
    // rho(g) rho(g^-1) = I already forces invertibility mod q
}

GModule GModule::natural(const MatrixGroup& g, std::int64_t p, int n)
{
    if (g.modulus != checked_pow(p, static_cast<unsigned>(n))) {
        throw DomainError("matrix group modulus must be p^n");
    }
    return GModule(g.group, p, n, g.elements);
}

GModule GModule::trivial(FiniteGroupTable group, std::int64_t p, int n, int rank)
{
    std::vector<ModMat> action(group.order(), ModMat::Identity(rank, rank));
    return GModule(std::move(group), p, n, std::move(action));
}

bool is_cocycle(const GModule& m, const Cocycle& c)
{
    const auto& g = m.group();
    const std::int64_t q = m.modulus();
    if (c.rows() != m.rank() || c.cols() != g.order()) {
        return false;
    }
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
            const ModMat lhs = reduce_matrix(c.col(g.mul(a, b)), q);
            const ModMat rhs = reduce_matrix(c.col(a) + multiply_mod(m.action(a), c.col(b), q), q);
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

CocycleSpace::CocycleSpace(const GModule& m)
    : m_(&m), z1_(Submodule::zero(0, 1)), b1_(Submodule::zero(0, 1))
{
    const auto& g = m.group();
    const std::int64_t q = m.modulus();
    const int r = m.rank();
    gens_ = g.generators();
    const auto k = static_cast<Eigen::Index>(r * gens_.size());

    // T_{x s} = T_x + rho(x) E_s along a spanning tree from the identity
    std::vector<IntMat>& eval = eval_;
    eval.assign(g.order(), IntMat());
    std::vector<char> done(g.order(), 0);
    eval[g.identity()] = IntMat::Zero(r, k);
    done[g.identity()] = 1;
    std::deque<int> queue{g.identity()};
    auto step = [&](int x, std::size_t s) {
        IntMat t = eval[x];
        t.middleCols(static_cast<Eigen::Index>(s) * r, r) += to_int(m.action(x));
        return reduce(std::move(t), q);
    };
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < gens_.size(); ++s) {
            const int y = g.mul(x, gens_[s]);
            if (!done[y]) {
                eval[y] = step(x, s);
                done[y] = 1;
                queue.push_back(y);
            }
        }
    }

    // c(x s) = c(x) + x c(s) for every x and s in S forces the cocycle identity
    Submodule z = Submodule::whole(k, q);
    for (int x = 0; x < g.order(); ++x) {
        for (std::size_t s = 0; s < gens_.size(); ++s) {
            const IntMat constraint = step(x, s) - eval_[g.mul(x, gens_[s])];
            if (is_zero_mod(constraint * z.basis(), q)) {
                continue;
            }
            z = z.restrict_preimage(constraint, Submodule::zero(r, q));
        }
    }
    z1_ = std::move(z);
    b1_ = Submodule::span(coboundary_generators(m, gens_), q);
    if (!z1_.contains(b1_)) {
        throw std::logic_error("coboundaries are not cocycles");
    }
}

Cocycle CocycleSpace::expand(const IntVec& v) const
{
    const auto& g = m_->group();
    const std::int64_t q = m_->modulus();
    Cocycle c(m_->rank(), g.order());
    for (int x = 0; x < g.order(); ++x) {
        const IntVec val = eval_[x] * v;
        for (int i = 0; i < m_->rank(); ++i) {
            BigInt e = val(i) % q;
            if (e < 0) {
                e += q;
            }
            c(i, x) = e.convert_to<std::int64_t>();
        }
    }
    return c;
}

Submodule CocycleSpace::locally_trivial(const std::vector<int>& gens) const
{
    const int r = m_->rank();
    const std::int64_t q = m_->modulus();
    IntMat values(r * static_cast<Eigen::Index>(gens.size()), z1_.dimension());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        values.middleRows(static_cast<Eigen::Index>(i) * r, r) = eval_[gens[i]];
    }
    // c|_H = d m  <=>  (c(h))_h in the span of ((rho(h) - 1) e_j)_h
    return z1_.restrict_preimage(values, Submodule::span(coboundary_generators(*m_, gens), q));
}

BigInt CohomologyResult::order() const
{
    BigInt total = 1;
    for (const auto& d : divisors) {
        total *= d;
    }
    return total;
}

namespace {

CohomologyResult make_result(const CocycleSpace& space, const Submodule& big, const Submodule& small)
{
    const QuotientStructure qs = quotient(big, small);
    CohomologyResult out;
    out.divisors = qs.divisors;
    out.cocycles = big;
    for (Eigen::Index j = 0; j < qs.generators.cols(); ++j) {
        Cocycle c = space.expand(qs.generators.col(j));
        if (!is_cocycle(space.module(), c)) {
            throw std::logic_error("generator fails the cocycle identity");
        }
        out.generators.push_back(std::move(c));
    }
    return out;
}

Submodule local_cocycles(const CocycleSpace& space, bool p_only)
{
    const auto& m = space.module();
    Submodule z = space.cocycles();
    for (const auto& c : cyclic_subgroups(m.group(), p_only, m.p())) {
        z = z.intersect(space.locally_trivial({c.generator}));
    }
    return z;
}

} // namespace

CohomologyResult cocycle_space(const GModule& m)
{
    const CocycleSpace space(m);
    return make_result(space, space.cocycles(), Submodule::zero(space.cocycles().dimension(), m.modulus()));
}

CohomologyResult coboundary_space(const GModule& m)
{
    const CocycleSpace space(m);
    return make_result(space, space.coboundaries(), Submodule::zero(space.cocycles().dimension(), m.modulus()));
}

CohomologyResult h1(const GModule& m)
{
    const CocycleSpace space(m);
    return make_result(space, space.cocycles(), space.coboundaries());
}

CohomologyResult h1_loc(const GModule& m, bool p_only)
{
    const CocycleSpace space(m);
    return make_result(space, local_cocycles(space, p_only), space.coboundaries());
}

bool check_p_cyclic_equivalence(const GModule& m)
{
    const CocycleSpace space(m);
    return local_cocycles(space, false) == local_cocycles(space, true);
}

bool check_sylow_injectivity(const GModule& m)
{
    const CocycleSpace space(m);
    const auto& g = m.group();
    const auto sylow_gens = g.generators_of(sylow_subgroup(g, m.p()));
    return space.locally_trivial(sylow_gens) == space.coboundaries();
}

} // namespace lgd
