#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgd/cohomology.hpp"
#include "lgd/pipeline.hpp"

using namespace lgd;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { Ok = 0, Inconsistent = 2, Inconclusive = 3, InputError = 4 };

struct SetArgs {
    std::int64_t prime = 5;
    std::string rule = "const:1";
    int depth = 8;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--p", prime, "auxiliary odd prime p'")->capture_default_str();
        cmd->add_option("--rule", rule, "digit rule, const:<d> or seed:<s>")->capture_default_str();
        cmd->add_option("--depth", depth, "depth N")->capture_default_str();
    }

    [[nodiscard]] SetSpec spec() const
    {
        SetSpec s{prime, parse_rule(rule), depth};
        validate(s);
        return s;
    }
};

std::vector<std::string> divisor_list(const CohomologyResult& r)
{
    std::vector<std::string> out;
    for (const auto& d : r.divisors) {
        out.push_back(to_string(d));
    }
    return out;
}

json ratio_json(const BigRat& r)
{
    return json{{"num", to_string(BigInt(numerator(r)))}, {"den", to_string(BigInt(denominator(r)))}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Persistent prime sets, local cohomology and local-global divisibility on elliptic curves"};
    app.require_subcommand(1);
    app.fallthrough();

    std::int64_t limit = 10'000;
    bool as_json = false;
    std::uint64_t seed = 1;
    app.add_option("--limit", limit, "bound X on primes")->capture_default_str();
    app.add_flag("--json", as_json, "JSON output");
    app.add_option("--seed", seed, "random seed")->capture_default_str();

    int code = Ok;

    // build-set
    auto* build = app.add_subcommand("build-set", "list primes up to the limit with their membership in S");
    SetArgs build_set;
    build_set.add_to(build);
    std::string out_path;
    build->add_option("--out", out_path, "CSV file (default stdout)");
    build->callback([&]() {
        const auto verdicts = enumerate_set(build_set.spec(), limit);
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                throw ParseError("cannot write " + out_path);
            }
        }
        std::ostream& os = out_path.empty() ? std::cout : file;
        os << "q,verdict,coordinate\n";
        for (const auto& v : verdicts) {
            os << v.prime << ',' << to_string(v.verdict) << ',';
            if (v.coordinate) {
                os << *v.coordinate;
            }
            os << '\n';
        }
    });

    // density
    auto* density = app.add_subcommand("density", "density of S among primes up to the limit");
    SetArgs density_set;
    density_set.add_to(density);
    std::string filter_text = "all";
    density->add_option("--filter", filter_text, "Chebotarev filter, e.g. 1mod7")->capture_default_str();
    density->callback([&]() {
        const auto spec = density_set.spec();
        const auto est = estimate_density(spec, limit, parse_filter(filter_text));
        json j;
        j["set"] = format_spec(spec);
        j["filter"] = filter_text;
        j["numerator"] = est.numerator;
        j["denominator"] = est.denominator;
        j["ratio_num"] = to_string(BigInt(numerator(est.ratio)));
        j["ratio_den"] = to_string(BigInt(denominator(est.ratio)));
        j["unknown"] = est.unknown;
        j["limit"] = est.limit;
        j["measure"] = ratio_json(haar_measure(proposition_set(spec.prime, spec.rule, spec.depth)));
        std::cout << j.dump(2) << '\n';
    });

    // frobenius
    auto* frob = app.add_subcommand("frobenius", "Frobenius coordinate and membership of one prime");
    SetArgs frob_set;
    frob_set.add_to(frob);
    std::int64_t q = 0;
    frob->add_option("--q", q, "prime q")->required();
    frob->callback([&]() {
        const auto spec = frob_set.spec();
        if (q < 2 || !is_prime(q)) {
            throw DomainError("q must be prime");
        }
        json j;
        j["q"] = q;
        j["set"] = format_spec(spec);
        if (q == spec.prime) {
            j["coordinate"] = nullptr;
        } else {
            j["coordinate"] = frobenius_coordinate(q, spec).value();
        }
        j["verdict"] = std::string(to_string(in_persistent_set(q, spec)));
        std::cout << j.dump(2) << '\n';
    });

    // local-test / global-test / check share the curve arguments
    std::string curve_text = "a=0 b=1";
    std::string point_text;
    std::int64_t p = 2;
    int n = 1;
    auto add_curve_args = [&](CLI::App* cmd) {
        cmd->add_option("--curve", curve_text, "curve, a=<rat> b=<rat>")->capture_default_str();
        cmd->add_option("--point", point_text, "point, inf or x=<rat> y=<rat>")->required();
        cmd->add_option("--p", p, "prime p")->capture_default_str();
        cmd->add_option("--n", n, "exponent n")->capture_default_str();
    };

    auto* local = app.add_subcommand("local-test", "is red_l(P) in p^n E(F_l)?");
    add_curve_args(local);
    std::int64_t ell = 0;
    std::string method = "structural";
    local->add_option("--ell", ell, "good prime l")->required();
    local->add_option("--method", method, "structural or brute_force")
        ->check(CLI::IsMember({"structural", "brute_force"}))
        ->capture_default_str();
    local->callback([&]() {
        const auto curve = parse_curve(curve_text);
        const auto point = parse_point(point_text, curve);
        const auto v = local_divide_test(curve, point, p, n, ell,
                                         method == "structural" ? LocalMethod::Structural : LocalMethod::BruteForce);
        json j;
        j["ell"] = v.ell;
        j["divisible"] = v.divisible;
        j["method"] = std::string(to_string(v.method));
        if (v.witness) {
            j["witness"] = format_point(*v.witness);
        }
        std::cout << j.dump(2) << '\n';
    });

    auto* global = app.add_subcommand("global-test", "is P in p^n E(Q)?");
    add_curve_args(global);
    std::string roots = "lifting";
    global->add_option("--roots", roots, "root finding: lifting or divisors")
        ->check(CLI::IsMember({"lifting", "divisors"}))
        ->capture_default_str();
    global->callback([&]() {
        const auto curve = parse_curve(curve_text);
        const auto point = parse_point(point_text, curve);
        GlobalOptions opts;
        opts.roots = roots == "lifting" ? RootMethod::Lifting : RootMethod::Divisors;
        const auto g = global_divide(curve, point, p, n, opts);
        json j;
        j["status"] = std::string(to_string(g.status));
        if (g.status == GlobalStatus::Inconclusive) {
            j["divisible"] = nullptr;
            code = Inconclusive;
        } else {
            j["divisible"] = g.status == GlobalStatus::Divisible;
        }
        j["method"] = g.via_torsion ? "torsion" : "division_polynomials";
        if (auto w = g.preimage()) {
            j["witness"] = format_point(*w);
        }
        auto& all = j["preimages"] = json::array();
        for (const auto& pre : g.preimages) {
            all.push_back(format_point(pre));
        }
        std::cout << j.dump(2) << '\n';
    });

    auto* check = app.add_subcommand("check", "local tests along S against the global oracle");
    add_curve_args(check);
    std::string set_text = "p=5 rule=const:1 depth=8";
    std::size_t sample = 50;
    unsigned threads = 0;
    bool csv = false;
    check->add_option("--set", set_text, "set spec record")->capture_default_str();
    check->add_option("--sample", sample, "number of admissible primes tested")->capture_default_str();
    check->add_option("--threads", threads, "worker threads, 0 for all cores")->capture_default_str();
    check->add_flag("--csv", csv, "per-prime CSV instead of the report");
    check->callback([&]() {
        const auto curve = parse_curve(curve_text);
        const auto point = parse_point(point_text, curve);
        const auto spec = parse_spec(set_text);
        CheckOptions opts;
        opts.sample = sample;
        opts.threads = threads;
        const auto rep = run_check(curve, point, p, n, spec, limit, opts);
        if (csv) {
            std::cout << rep.local_csv();
        } else if (as_json) {
            std::cout << rep.to_json().dump(2) << '\n';
        } else {
            std::cout << rep.to_text();
        }
        if (!rep.consistent) {
            code = Inconsistent;
        } else if (rep.global.status == GlobalStatus::Inconclusive) {
            code = Inconclusive;
        }
    });

    auto* cohom = app.add_subcommand("cohomology", "H^1 and H^1_loc of matrix groups");
    cohom->require_subcommand(1);
    auto* h1loc = cohom->add_subcommand("h1loc", "natural action of a matrix group on (Z/p^n)^r");
    std::int64_t cp = 3;
    int cn = 1;
    std::string gens_text;
    h1loc->add_option("--p", cp, "prime p")->capture_default_str();
    h1loc->add_option("--n", cn, "exponent n")->capture_default_str();
    h1loc->add_option("--generators", gens_text, "matrices, [[a,b],[c,d]];...")->required();
    h1loc->callback([&]() {
        if (cp < 2 || !is_prime(cp) || cn < 1) {
            throw DomainError("p must be prime and n >= 1");
        }
        const auto group = matrix_group(parse_matrices(gens_text), checked_pow(cp, static_cast<unsigned>(cn)));
        const auto m = GModule::natural(group, cp, cn);
        json j;
        j["order"] = group.group.order();
        j["h1"] = divisor_list(h1(m));
        j["h1loc"] = divisor_list(h1_loc(m));
        j["h1loc_p_only"] = divisor_list(h1_loc(m, true));
        j["p_sylow_cyclic"] = sylow_is_cyclic(group.group, cp);
        std::cout << j.dump(2) << '\n';
    });

    auto* sweep = app.add_subcommand("sweep", "constructed divisible instances through the whole check");
    int count = 20;
    sweep->add_option("--count", count, "number of instances")->capture_default_str();
    sweep->callback([&]() {
        SweepOptions opts;
        opts.limit = limit;
        const auto s = soundness_sweep(count, seed, opts);
        std::cout << (as_json ? s.to_json().dump(2) + "\n" : s.to_text());
        if (!s.all_passed()) {
            code = Inconsistent;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return InputError;
    } catch (const EmptySample& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    } catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    }
    return code;
}
