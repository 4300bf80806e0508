#include "lgd/pipeline.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

namespace lgd {

bool BdBound::exceeded_by(const BigInt& p) const
{
    if (value) {
        return p > *value;
    }
    // p > 3^d + 2 * 3^{d/2} + 1  <=>  A = p - 3^d - 1 > 0 and A^2 > 4 * 3^d
    BigInt three_d = 1;
    for (int i = 0; i < d; ++i) {
        three_d *= 3;
    }
    const BigInt a = p - three_d - 1;
    return a > 0 && a * a > 4 * three_d;
}

std::string BdBound::to_string() const
{
    if (value) {
        return lgd::to_string(*value);
    }
    return "(3^(" + std::to_string(d) + "/2)+1)^2";
}

BdBound b_bound(int d)
{
    if (d < 1) {
        throw DomainError("degree must be at least 1");
    }
    if (d == 1) {
        return {1, BigInt(3)};
    }
    if (d % 2 == 0) {
        BigInt h = 1;
        for (int i = 0; i < d / 2; ++i) {
            h *= 3;
        }
        return {d, BigInt((h + 1) * (h + 1))};
    }
    return {d, std::nullopt};
}

namespace {

std::string format_status(GlobalStatus s) { return std::string(to_string(s)); }

} // namespace

DivisibilityReport run_check(const RationalCurve& curve, const RationalPoint& point, std::int64_t p, int n,
                             const PersistentSetSpec& spec, std::int64_t limit, const CheckOptions& options)
{
    validate(spec);
    if (p < 2 || !is_prime(p) || n < 1) {
        throw DomainError("divisibility needs a prime p and n >= 1");
    }
    if (!curve.contains(point)) {
        throw DomainError("point is not on the curve");
    }
    DivisibilityReport rep{curve, point, p, n, spec, limit, options.sample, {}, {}, {}, false, false, false, false, {}};
    rep.assumption = "S is assumed p-stable for the division tower (persistent set construction); not verified";

    std::vector<std::int64_t> chosen;
    for (const auto& v : enumerate_set(spec, limit)) {
        if (v.verdict == Membership::Out) {
            continue;
        }
        const std::int64_t ell = v.prime;
        std::string reason;
        if (v.verdict == Membership::Unknown) {
            reason = "unknown membership";
        } else if (ell == 2) {
            reason = "l = 2";
        } else if (ell == p) {
            reason = "l = p";
        } else if (curve.discriminant() % ell == 0) {
            reason = "bad reduction";
        } else if (ell > kMaxCountingPrime) {
            reason = "above the point counting cap";
        } else if (chosen.size() >= options.sample) {
            continue;
        }
        if (!reason.empty()) {
            rep.skipped.push_back({ell, reason});
        } else {
            chosen.push_back(ell);
        }
    }
    if (chosen.empty()) {
        throw EmptySample("no admissible prime of S up to " + std::to_string(limit));
    }

    unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    rep.local.resize(chosen.size());
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
        jobs.push_back(std::async(std::launch::async, [&, t]() {
            for (std::size_t i = t; i < chosen.size(); i += threads) {
                rep.local[i] = local_divide_test(curve, point, p, n, chosen[i]);
            }
        }));
    }
    for (auto& j : jobs) {
        j.get();
    }

    rep.global = global_divide(curve, point, p, n, options.global);
    rep.all_local_divisible =
        std::all_of(rep.local.begin(), rep.local.end(), [](const LocalVerdict& v) { return v.divisible; });
    rep.theorem_applicable = n == 1 || b_bound(1).exceeded_by(p);
    rep.theorem_predicts_divisible = rep.all_local_divisible && rep.theorem_applicable;
    const bool global_yes = rep.global.status == GlobalStatus::Divisible;
    const bool decided = rep.global.status != GlobalStatus::Inconclusive;
    rep.consistent = (!global_yes || rep.all_local_divisible) &&
                     (!(rep.theorem_predicts_divisible && decided) || global_yes);
    return rep;
}

nlohmann::ordered_json DivisibilityReport::to_json() const
{
    nlohmann::ordered_json j;
    j["curve"] = format_curve(curve);
    j["point"] = format_point(point);
    j["p"] = p;
    j["n"] = n;
    j["set"] = format_spec(spec);
    j["limit"] = limit;
    j["local_evidence"] = "sampled";
    j["sample_size"] = sample_size;
    j["tested"] = local.size();
    auto& tested = j["local"] = nlohmann::ordered_json::array();
    for (const auto& v : local) {
        nlohmann::ordered_json e;
        e["ell"] = v.ell;
        e["divisible"] = v.divisible;
        e["method"] = std::string(to_string(v.method));
        if (v.witness) {
            e["witness"] = format_point(*v.witness);
        }
        tested.push_back(e);
    }
    auto& skip = j["skipped"] = nlohmann::ordered_json::array();
    for (const auto& s : skipped) {
        skip.push_back({{"ell", s.prime}, {"reason", s.reason}});
    }
    j["global"] = format_status(global.status);
    if (auto q = global.preimage()) {
        j["preimage"] = format_point(*q);
    }
    j["global_via_torsion"] = global.via_torsion;
    j["all_local_divisible"] = all_local_divisible;
    j["theorem_applicable"] = theorem_applicable;
    j["theorem_predicted"] = theorem_predicts_divisible ? "divisible" : "none";
    j["consistent"] = consistent;
    j["assumption"] = assumption;
    return j;
}

std::string DivisibilityReport::to_text() const
{
    std::ostringstream out;
    const std::size_t failures =
        std::count_if(local.begin(), local.end(), [](const LocalVerdict& v) { return !v.divisible; });
    auto row = [&](const std::string& k, const std::string& v) { out << std::left << std::setw(20) << k << v << '\n'; };
    row("curve", format_curve(curve));
    row("point", format_point(point));
    row("p^n", std::to_string(p) + "^" + std::to_string(n));
    row("set", format_spec(spec));
    row("limit", std::to_string(limit));
    row("local (sampled)",
        std::to_string(local.size() - failures) + "/" + std::to_string(local.size()) + " divisible");
    if (failures > 0) {
        const auto it = std::find_if(local.begin(), local.end(), [](const LocalVerdict& v) { return !v.divisible; });
        row("first failure", "l = " + std::to_string(it->ell));
    }
    row("skipped", std::to_string(skipped.size()));
    std::string g = format_status(global.status);
    if (auto q = global.preimage()) {
        g += " (" + format_point(*q) + ")";
    }
    row("global", g);
    row("theorem applicable", theorem_applicable ? "yes" : "no");
    row("theorem predicted", theorem_predicts_divisible ? "divisible" : "none");
    row("consistent", consistent ? "yes" : "no");
    row("assumption", assumption);
    return out.str();
}

std::string DivisibilityReport::local_csv() const
{
    std::ostringstream out;
    out << "ell,divisible,method,witness\n";
    for (const auto& v : local) {
        out << v.ell << ',' << (v.divisible ? "true" : "false") << ',' << to_string(v.method) << ','
            << (v.witness ? format_point(*v.witness) : "") << '\n';
    }
    return out.str();
}

std::size_t SweepSummary::passed() const
{
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.passed(); }));
}

SweepSummary soundness_sweep(int count, std::uint64_t seed, const SweepOptions& options)
{
    if (count < 0) {
        throw DomainError("instance count must be non-negative");
    }
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(2 * options.range + 1);
    auto draw = [&]() { return static_cast<std::int64_t>(rng() % span) - options.range; };
    const std::int64_t primes[] = {2, 3, 5};
    SweepSummary summary{seed, {}};
    for (int i = 0; i < count; ++i) {
        std::int64_t x0 = 0, y0 = 0, a = 0, b = 0;
        do {
            x0 = draw();
            y0 = draw();
            a = draw();
            b = y0 * y0 - x0 * x0 * x0 - a * x0;
        } while (4 * a * a * a + 27 * b * b == 0);
        const std::int64_t p = primes[rng() % 3];
        const int n = 1 + static_cast<int>(rng() % 2);
        const RationalCurve curve{BigRat(a), BigRat(b)};
        const auto q = RationalPoint::affine(BigRat(x0), BigRat(y0));
        const auto point = curve.mul(checked_pow(p, static_cast<unsigned>(n)), q);

        SweepRow row{i, curve, q, point, p, n, 0, 0, GlobalStatus::Inconclusive, false, false};
        const auto rep = run_check(curve, point, p, n, options.spec, options.limit, options.check);
        row.local_tested = rep.local.size();
        row.local_divisible = static_cast<std::size_t>(
            std::count_if(rep.local.begin(), rep.local.end(), [](const LocalVerdict& v) { return v.divisible; }));
        row.global = rep.global.status;
        if (auto pre = rep.global.preimage()) {
            row.preimage_verified = curve.mul(checked_pow(p, static_cast<unsigned>(n)), *pre) == point;
        }
        row.consistent = rep.consistent;
        summary.rows.push_back(std::move(row));
    }
    return summary;
}

nlohmann::ordered_json SweepSummary::to_json() const
{
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["instances"] = rows.size();
    j["passed"] = passed();
    auto& arr = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json e;
        e["index"] = r.index;
        e["curve"] = format_curve(r.curve);
        e["q"] = format_point(r.q);
        e["point"] = format_point(r.point);
        e["p"] = r.p;
        e["n"] = r.n;
        e["local_tested"] = r.local_tested;
        e["local_divisible"] = r.local_divisible;
        e["global"] = format_status(r.global);
        e["preimage_verified"] = r.preimage_verified;
        e["consistent"] = r.consistent;
        e["pass"] = r.passed();
        arr.push_back(e);
    }
    return j;
}

std::string SweepSummary::to_text() const
{
    std::ostringstream out;
    out << std::left << std::setw(4) << "#" << std::setw(22) << "curve" << std::setw(16) << "Q" << std::setw(6)
        << "p^n" << std::setw(10) << "local" << std::setw(15) << "global" << "result\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(4) << r.index << std::setw(22) << format_curve(r.curve) << std::setw(16)
            << format_point(r.q) << std::setw(6) << (std::to_string(r.p) + "^" + std::to_string(r.n))
            << std::setw(10) << (std::to_string(r.local_divisible) + "/" + std::to_string(r.local_tested))
            << std::setw(15) << format_status(r.global) << (r.passed() ? "pass" : "FAIL") << '\n';
    }
    out << passed() << "/" << rows.size() << " passed (seed " << seed << ")\n";
    return out.str();
}

} // namespace lgd
