#include "lgd/padic.hpp"

#include <charconv>
#include <sstream>

namespace lgd {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what)
{
    std::int64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        throw ParseError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

std::string_view take_field(std::string_view token, std::string_view key)
{
    if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
        throw ParseError("expected field '" + std::string(key) + "=' but found '" + std::string(token) + "'");
    }
    return token.substr(key.size() + 1);
}

} // namespace

std::vector<std::int64_t> rule_digits(const DigitRule& rule, std::int64_t p, int count)
{
    std::vector<std::int64_t> digits;
    digits.reserve(static_cast<std::size_t>(std::max(count, 0)));
    if (const auto* c = std::get_if<ConstantDigit>(&rule)) {
        digits.assign(static_cast<std::size_t>(std::max(count, 0)), c->digit);
        return digits;
    }
    const auto& seeded = std::get<SeededSequence>(rule);
    constexpr std::int64_t kMod = std::int64_t{1} << 31;
    std::int64_t s = seeded.seed % kMod;
    if (s < 0) {
        s += kMod;
    }
    for (int n = 0; n < count; ++n) {
        digits.push_back(1 + s % (p - 1));
        s = (1103515245 * s + 12345) % kMod;
    }
    return digits;
}

std::string format_rule(const DigitRule& rule)
{
    if (const auto* c = std::get_if<ConstantDigit>(&rule)) {
        return "const:" + std::to_string(c->digit);
    }
    return "seed:" + std::to_string(std::get<SeededSequence>(rule).seed);
}

DigitRule parse_rule(std::string_view text)
{
    if (text.starts_with("const:")) {
        return ConstantDigit{parse_int(text.substr(6), "digit")};
    }
    if (text.starts_with("seed:")) {
        return SeededSequence{parse_int(text.substr(5), "seed")};
    }
    throw ParseError("digit rule must be const:<digit> or seed:<int>, got '" + std::string(text) + "'");
}

std::string format_spec(const SetSpec& spec)
{
    return "p=" + std::to_string(spec.prime) + " rule=" + format_rule(spec.rule) +
           " depth=" + std::to_string(spec.depth);
}

SetSpec parse_spec(std::string_view text)
{
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(' ', pos);
        tokens.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (tokens.back().empty()) {
            throw ParseError("set record fields must be separated by single spaces");
        }
        if (next == std::string_view::npos) {
            break;
        }
        pos = next + 1;
    }
    if (tokens.size() != 3) {
        throw ParseError("set record needs exactly the fields p, rule and depth");
    }
    SetSpec spec;
    spec.prime = parse_int(take_field(tokens[0], "p"), "p");
    spec.rule = parse_rule(take_field(tokens[1], "rule"));
    spec.depth = static_cast<int>(parse_int(take_field(tokens[2], "depth"), "depth"));
    return spec;
}

bool ResidueClass::contains(std::int64_t x) const
{
    const std::int64_t m = modulus();
    std::int64_t r = x % m;
    if (r < 0) {
        r += m;
    }
    return r == center;
}

std::string_view to_string(Membership m)
{
    switch (m) {
    case Membership::In:
        return "in";
    case Membership::Out:
        return "out";
    case Membership::Unknown:
        return "unknown";
    }
    return "unknown";
}

PadicOpenSet::PadicOpenSet(std::int64_t p, int depth, std::vector<ResidueClass> classes)
    : p_(p), depth_(depth), classes_(std::move(classes))
{
    if (!is_prime(p)) {
        throw DomainError("p-adic set needs a prime, got " + std::to_string(p));
    }
    if (depth < 0) {
        throw DomainError("depth must be non-negative");
    }
    (void)checked_pow(p, static_cast<unsigned>(depth));
    for (const auto& c : classes_) {
        if (c.p != p || c.level < 0 || c.level > depth) {
            throw DomainError("residue class does not fit the set (prime or level)");
        }
        if (c.center < 0 || c.center >= c.modulus()) {
            throw DomainError("residue class center out of range");
        }
    }
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (std::size_t j = i + 1; j < classes_.size(); ++j) {
            const auto& a = classes_[i].level <= classes_[j].level ? classes_[i] : classes_[j];
            const auto& b = classes_[i].level <= classes_[j].level ? classes_[j] : classes_[i];
            if (a.contains(b.center)) {
                throw DomainError("residue classes overlap");
            }
        }
    }
}

PadicOpenSet proposition_set(std::int64_t p, const DigitRule& rule, int depth)
{
    if (p < 3 || !is_prime(p)) {
        throw DomainError("proposition_set requires an odd prime");
    }
    if (depth < 1) {
        throw DomainError("depth must be at least 1");
    }
    const auto digits = rule_digits(rule, p, depth);
    std::vector<ResidueClass> classes;
    std::int64_t place = 1; // p^{n-1}
    for (int n = 1; n <= depth; ++n) {
        const std::int64_t a = digits[static_cast<std::size_t>(n - 1)];
        if (a % p == 0) {
            throw DomainError("digit " + std::to_string(a) + " is zero mod p");
        }
        const std::int64_t r = ((a % p) + p) % p;
        classes.push_back(ResidueClass{p, n, r * place});
        place *= p;
    }
    return PadicOpenSet(p, depth, std::move(classes));
}

BigRat haar_measure(const PadicOpenSet& set)
{
    BigRat total = 0;
    for (const auto& c : set.classes()) {
        total += BigRat(BigInt(1), pow(BigInt(set.prime()), static_cast<unsigned>(c.level)));
    }
    return total;
}

Membership contains(const PadicOpenSet& set, std::int64_t x)
{
    const std::int64_t top = checked_pow(set.prime(), static_cast<unsigned>(set.depth()));
    std::int64_t r = x % top;
    if (r < 0) {
        r += top;
    }
    for (const auto& c : set.classes()) {
        if (c.contains(r)) {
            return Membership::In;
        }
    }
    return r == 0 ? Membership::Unknown : Membership::Out;
}

Membership contains(const PadicOpenSet& set, const BigInt& x)
{
    const BigInt top = pow(BigInt(set.prime()), static_cast<unsigned>(set.depth()));
    BigInt r = x % top;
    if (r < 0) {
        r += top;
    }
    return contains(set, r.convert_to<std::int64_t>());
}

PadicOpenSet intersect_subgroup(const PadicOpenSet& set, int m)
{
    if (m < 0) {
        throw DomainError("subgroup index must be non-negative");
    }
    if (m >= set.depth()) {
        throw DepthExceeded("m = " + std::to_string(m) + " is not below depth " + std::to_string(set.depth()));
    }
    const std::int64_t pm = checked_pow(set.prime(), static_cast<unsigned>(m));
    std::vector<ResidueClass> kept;
    for (const auto& c : set.classes()) {
        if (c.level > m && c.center % pm == 0) {
            kept.push_back(c);
        } else if (c.level <= m && c.center == 0) {
            // the class swallows all of p^m Z_p
            kept.push_back(ResidueClass{set.prime(), m, 0});
        }
    }
    return PadicOpenSet(set.prime(), set.depth(), std::move(kept));
}

} // namespace lgd
