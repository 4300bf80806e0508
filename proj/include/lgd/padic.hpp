#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lgd/arith.hpp"

namespace lgd {

/// Every digit equal to `digit` (1 <= digit < p).
struct ConstantDigit {
    std::int64_t digit = 1;
    bool operator==(const ConstantDigit&) const = default;
};

/// Digits from a 31-bit linear congruential generator:
/// s_0 = seed mod 2^31, s_{k+1} = (1103515245 s_k + 12345) mod 2^31,
/// and the n-th digit (n >= 1) is 1 + (s_{n-1} mod (p-1)).
struct SeededSequence {
    std::int64_t seed = 0;
    bool operator==(const SeededSequence&) const = default;
};

using DigitRule = std::variant<ConstantDigit, SeededSequence>;

/// The first `count` digits a_1, ..., a_count for prime p.
std::vector<std::int64_t> rule_digits(const DigitRule& rule, std::int64_t p, int count);

/// Parameters of the set built by proposition_set: the prime, the digit rule
/// and the truncation depth.
struct SetSpec {
    std::int64_t prime = 5;
    DigitRule rule = ConstantDigit{1};
    int depth = 8;
    bool operator==(const SetSpec&) const = default;
};

/// `p=<prime> rule=const:<digit>|seed:<int> depth=<N>`
std::string format_spec(const SetSpec& spec);
/// Inverse of format_spec; throws ParseError.
SetSpec parse_spec(std::string_view text);
/// `const:<digit>` or `seed:<int>`
DigitRule parse_rule(std::string_view text);
std::string format_rule(const DigitRule& rule);

/// a + p^level Z_p with 0 <= a < p^level.
struct ResidueClass {
    std::int64_t p = 2;
    int level = 0;
    std::int64_t center = 0;

    [[nodiscard]] std::int64_t modulus() const { return checked_pow(p, static_cast<unsigned>(level)); }
    [[nodiscard]] bool contains(std::int64_t x) const;
    bool operator==(const ResidueClass&) const = default;
};

enum class Membership { In, Out, Unknown };

std::string_view to_string(Membership m);

/// Finite disjoint union of residue classes in Z_p, truncated at a depth N
/// that bounds every class level.
class PadicOpenSet {
public:
    /// Validates levels, centers and pairwise disjointness; throws DomainError.
    PadicOpenSet(std::int64_t p, int depth, std::vector<ResidueClass> classes);

    [[nodiscard]] std::int64_t prime() const { return p_; }
    [[nodiscard]] int depth() const { return depth_; }
    [[nodiscard]] const std::vector<ResidueClass>& classes() const { return classes_; }

private:
    std::int64_t p_;
    int depth_;
    std::vector<ResidueClass> classes_;
};

/// Union of a_n p^{n-1} + p^n Z_p for n = 1..depth (odd p, nonzero digits).
PadicOpenSet proposition_set(std::int64_t p, const DigitRule& rule, int depth);
inline PadicOpenSet proposition_set(const SetSpec& spec)
{
    return proposition_set(spec.prime, spec.rule, spec.depth);
}

/// Exact Haar measure, sum of p^{-level} over the classes.
BigRat haar_measure(const PadicOpenSet& set);

/// Membership of x, read modulo p^N. Unknown when x = 0 mod p^N and no class
/// covers 0: a deeper class might still contain x.
Membership contains(const PadicOpenSet& set, std::int64_t x);
Membership contains(const PadicOpenSet& set, const BigInt& x);

/// Classes lying inside p^m Z_p; requires m < depth (DepthExceeded otherwise).
PadicOpenSet intersect_subgroup(const PadicOpenSet& set, int m);

} // namespace lgd
