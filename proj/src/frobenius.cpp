#include "lgd/frobenius.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "lgd/sieve.hpp"

namespace lgd {

void validate(const PersistentSetSpec& spec)
{
    if (spec.prime < 3 || !is_prime(spec.prime)) {
        throw DomainError("auxiliary prime must be an odd prime, got " + std::to_string(spec.prime));
    }
    if (spec.depth < 1) {
        throw DomainError("depth must be at least 1");
    }
    (void)checked_pow(spec.prime, static_cast<unsigned>(spec.depth + 1));
    for (const auto d : rule_digits(spec.rule, spec.prime, spec.depth)) {
        if (d % spec.prime == 0) {
            throw DomainError("digit rule produces a digit divisible by p");
        }
    }
}

void validate(const PersistentSetSpec& spec, const BigRat& epsilon)
{
    validate(spec);
    if (BigRat(BigInt(1), BigInt(spec.prime - 1)) >= epsilon) {
        throw DomainError("1/(p-1) is not below epsilon for p = " + std::to_string(spec.prime));
    }
}

PersistentSetSpec spec_for_epsilon(const BigRat& epsilon, DigitRule rule, int depth)
{
    if (epsilon <= 0) {
        throw DomainError("epsilon must be positive");
    }
    std::int64_t p = 3;
    while (BigRat(BigInt(1), BigInt(p - 1)) >= epsilon || !is_prime(p)) {
        p += 2;
    }
    PersistentSetSpec spec{p, rule, depth};
    validate(spec, epsilon);
    return spec;
}

ChebotarevPredicate::ChebotarevPredicate(std::int64_t modulus, std::vector<std::int64_t> residues)
    : modulus_(modulus)
{
    if (modulus < 1) {
        throw DomainError("filter modulus must be positive");
    }
    for (auto r : residues) {
        r %= modulus;
        if (r < 0) {
            r += modulus;
        }
        if (std::gcd(r, modulus) != 1) {
            throw DomainError("residue " + std::to_string(r) + " is not coprime to " + std::to_string(modulus));
        }
        residues_.push_back(r);
    }
    if (modulus == 1) {
        residues_ = {0};
    }
    std::sort(residues_.begin(), residues_.end());
    residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
    if (residues_.empty()) {
        throw DomainError("filter needs at least one residue");
    }
}

bool ChebotarevPredicate::operator()(std::int64_t q) const
{
    if (modulus_ % q == 0 && modulus_ != 1) {
        return false;
    }
    return std::binary_search(residues_.begin(), residues_.end(), q % modulus_);
}

ChebotarevPredicate chebotarev_filter(std::int64_t modulus, std::vector<std::int64_t> residues)
{
    return ChebotarevPredicate(modulus, std::move(residues));
}

ChebotarevPredicate parse_filter(std::string_view text)
{
    if (text == "all" || text == "none") {
        return ChebotarevPredicate(1, {0});
    }
    const auto split = text.find("mod");
    if (split == std::string_view::npos) {
        throw ParseError("filter must look like 1mod7 or 1,2mod7");
    }
    auto number = [](std::string_view s) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw ParseError("bad number in filter: '" + std::string(s) + "'");
        }
        return v;
    };
    const std::int64_t modulus = number(text.substr(split + 3));
    std::vector<std::int64_t> residues;
    std::string_view rest = text.substr(0, split);
    while (true) {
        const auto comma = rest.find(',');
        residues.push_back(number(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    try {
        return ChebotarevPredicate(modulus, std::move(residues));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

ResidueInt frobenius_coordinate(std::int64_t q, const PersistentSetSpec& spec)
{
    if (q == spec.prime) {
        throw DomainError("Frobenius coordinate undefined at the ramified prime");
    }
    if (q % spec.prime == 0) {
        throw DomainError("q must be a prime different from p");
    }
    const std::int64_t big = checked_pow(spec.prime, static_cast<unsigned>(spec.depth + 1));
    const ResidueInt u = mod_pow(ResidueInt(q, big), static_cast<std::uint64_t>(spec.prime - 1));
    return discrete_log_1p(u, spec.prime);
}

Membership in_persistent_set(std::int64_t q, const PersistentSetSpec& spec)
{
    if (q == spec.prime) {
        return Membership::Out;
    }
    const auto set = proposition_set(spec);
    return contains(set, frobenius_coordinate(q, spec).value());
}

std::vector<PrimeVerdict> enumerate_set(const PersistentSetSpec& spec, std::int64_t limit)
{
    validate(spec);
    std::vector<PrimeVerdict> out;
    if (limit < 2) {
        return out;
    }
    const auto set = proposition_set(spec);
    const auto primes = prime_sieve(limit);
    out.reserve(primes.size());
    for (const auto q : primes) {
        if (q == spec.prime) {
            out.push_back({q, Membership::Out, std::nullopt});
            continue;
        }
        const std::int64_t x = frobenius_coordinate(q, spec).value();
        out.push_back({q, contains(set, x), x});
    }
    return out;
}

DensityEstimate estimate_density(const PersistentSetSpec& spec, std::int64_t limit,
                                 const std::optional<ChebotarevPredicate>& filter)
{
    DensityEstimate est;
    est.limit = limit;
    for (const auto& v : enumerate_set(spec, limit)) {
        if (filter && !(*filter)(v.prime)) {
            continue;
        }
        ++est.denominator;
        if (v.verdict == Membership::In) {
            ++est.numerator;
        } else if (v.verdict == Membership::Unknown) {
            ++est.unknown;
        }
    }
    est.ratio = est.denominator == 0 ? BigRat(0) : BigRat(BigInt(est.numerator), BigInt(est.denominator));
    return est;
}

} // namespace lgd
