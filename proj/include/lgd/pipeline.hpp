#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgd/divisibility.hpp"
#include "lgd/frobenius.hpp"

namespace lgd {

/// B(d) = 3 for d = 1 and (3^{d/2} + 1)^2 for d > 1. For odd d > 1 the value
/// is irrational and kept symbolically as 3^d + 2 * 3^{d/2} + 1.
struct BdBound {
    int d = 1;
    /// The exact value when it is an integer.
    std::optional<BigInt> value;

    /// p > B(d), decided exactly.
    [[nodiscard]] bool exceeded_by(const BigInt& p) const;
    [[nodiscard]] std::string to_string() const;
};

BdBound b_bound(int d);

struct SkippedPrime {
    std::int64_t prime;
    std::string reason;
};

struct CheckOptions {
    /// Number of admissible primes of S tested locally.
    std::size_t sample = 50;
    unsigned threads = 0; // 0: hardware concurrency
    GlobalOptions global{};
};

struct DivisibilityReport {
    RationalCurve curve;
    RationalPoint point;
    std::int64_t p = 0;
    int n = 0;
    PersistentSetSpec spec;
    std::int64_t limit = 0;
    std::size_t sample_size = 0;

    std::vector<LocalVerdict> local;
    std::vector<SkippedPrime> skipped;
    GlobalOutcome global;

    bool all_local_divisible = false;
    bool theorem_applicable = false;
    /// All sampled local tests passed and the theorem applies: a prediction,
    /// independent of the global oracle.
    bool theorem_predicts_divisible = false;
    bool consistent = false;
    std::string assumption;

    [[nodiscard]] nlohmann::ordered_json to_json() const;
    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] std::string local_csv() const;
};

/// Tests P for p^n-divisibility at the sampled admissible primes of S up to
/// `limit`, decides it globally and compares. Throws EmptySample when no
/// admissible prime of S lies below the limit.
DivisibilityReport run_check(const RationalCurve& curve, const RationalPoint& point, std::int64_t p, int n,
                             const PersistentSetSpec& spec, std::int64_t limit, const CheckOptions& options = {});

struct SweepRow {
    int index = 0;
    RationalCurve curve;
    RationalPoint q;
    RationalPoint point;
    std::int64_t p = 0;
    int n = 0;
    std::size_t local_tested = 0;
    std::size_t local_divisible = 0;
    GlobalStatus global = GlobalStatus::Inconclusive;
    bool preimage_verified = false;
    bool consistent = false;

    [[nodiscard]] bool passed() const
    {
        return local_tested > 0 && local_divisible == local_tested && global == GlobalStatus::Divisible &&
               preimage_verified && consistent;
    }
};

struct SweepSummary {
    std::uint64_t seed = 0;
    std::vector<SweepRow> rows;

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] bool all_passed() const { return passed() == rows.size(); }
    [[nodiscard]] nlohmann::ordered_json to_json() const;
    [[nodiscard]] std::string to_text() const;
};

struct SweepOptions {
    PersistentSetSpec spec{};
    std::int64_t limit = 10'000;
    CheckOptions check{};
    /// Coordinates of Q and the coefficient a are drawn from [-range, range].
    std::int64_t range = 5;
};

/// `count` random curves through random integral Q, with P = p^n Q for p in
/// {2, 3, 5} and n in {1, 2}, all run through run_check. Deterministic in the seed.
SweepSummary soundness_sweep(int count, std::uint64_t seed, const SweepOptions& options = {});

} // namespace lgd
