#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgd/padic.hpp"

namespace lgd {

/// Parameters of the prime set S: the auxiliary odd prime p', the digit rule
/// and the depth N. S is the set of primes whose Frobenius in the cyclotomic
/// Z_{p'}-extension of Q falls into proposition_set(p', rule, N).
using PersistentSetSpec = SetSpec;

/// Throws DomainError unless p' is an odd prime and N >= 1.
void validate(const PersistentSetSpec& spec);

/// As validate, and additionally requires 1/(p'-1) < epsilon.
void validate(const PersistentSetSpec& spec, const BigRat& epsilon);

/// The spec with the smallest odd prime p' satisfying 1/(p'-1) < epsilon.
PersistentSetSpec spec_for_epsilon(const BigRat& epsilon, DigitRule rule = ConstantDigit{1}, int depth = 8);

/// Primes q with q not dividing m and (q mod m) in the allowed residues.
class ChebotarevPredicate {
public:
    /// Throws DomainError when a residue is not coprime to m.
    ChebotarevPredicate(std::int64_t modulus, std::vector<std::int64_t> residues);

    [[nodiscard]] bool operator()(std::int64_t q) const;
    [[nodiscard]] std::int64_t modulus() const { return modulus_; }
    [[nodiscard]] const std::vector<std::int64_t>& residues() const { return residues_; }

private:
    std::int64_t modulus_;
    std::vector<std::int64_t> residues_; // sorted, reduced
};

ChebotarevPredicate chebotarev_filter(std::int64_t modulus, std::vector<std::int64_t> residues);

/// Parses "1mod7" or "1,2,4mod7"; "all" is the trivial filter mod 1.
ChebotarevPredicate parse_filter(std::string_view text);

/// Image of Frob_q in Gal(Q_infinity/Q) = Z_{p'}, modulo p'^N: the x with
/// (1+p')^x = q^{p'-1} mod p'^{N+1}. Throws DomainError when q = p'.
ResidueInt frobenius_coordinate(std::int64_t q, const PersistentSetSpec& spec);

/// Membership of the prime q in S. q = p' is Out.
Membership in_persistent_set(std::int64_t q, const PersistentSetSpec& spec);

struct PrimeVerdict {
    std::int64_t prime;
    Membership verdict;
    /// Absent for q = p'.
    std::optional<std::int64_t> coordinate;
};

/// Verdicts for every prime q <= limit, ascending.
std::vector<PrimeVerdict> enumerate_set(const PersistentSetSpec& spec, std::int64_t limit);

struct DensityEstimate {
    std::int64_t numerator = 0;   // primes in S passing the filter
    std::int64_t denominator = 0; // primes passing the filter
    std::int64_t unknown = 0;     // filtered primes with undecided membership
    std::int64_t limit = 0;
    BigRat ratio;
};

/// Natural-density proxy for the density of S among primes <= limit that
/// satisfy the filter. Unknown primes count in the denominator only.
DensityEstimate estimate_density(const PersistentSetSpec& spec, std::int64_t limit,
                                 const std::optional<ChebotarevPredicate>& filter = std::nullopt);

} // namespace lgd
