// hyperjac command-line front end: divisor reduction and addition on
// hyperelliptic curves y^2 = P(x) in exact arithmetic, with the classical
// algorithm available as an independent cross-check and a strategy benchmark.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperjac/bench.hpp"
#include "hyperjac/hyperjac.hpp"

namespace hj = hyperjac;

namespace {

struct Options {
    std::string command;
    std::string curve_file;
    std::string divisor_file;
    std::string divisor_file2;
    std::string strategy = "by_g1";
    std::string route = "general";
    std::string scenario = "I";
    bool check_oracle = false;
    bool wp_labels = false;
    std::uint64_t na = 1;
    std::uint64_t nb = 1;
    // bench
    std::string field = "GF(1009)";
    std::string genus_range = "1:5";
    std::string m_range = "1:6";
    int trials = 3;
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) hj::raise(hj::errc::parse_error, "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        hj::raise(hj::errc::parse_error, "bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::pair<int, int> parse_range(const std::string& s) {
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    } catch (const std::exception&) {
        hj::raise(hj::errc::parse_error, "bad range '" + s + "' (want a:b)");
    }
}

template <class K>
void print_mumford(const hj::MumfordDivisor<K>& d, const std::string& prefix = "") {
    std::cout << prefix << "U = " << hj::to_string(d.u()) << "\n";
    std::cout << prefix << "V = " << hj::to_string(d.v()) << "\n";
}

// Reads the coefficients of the canonical pair as values of the basis Abelian
// functions attached to the class point u: U = x^g - sum x^{g-k} wp[1,2k-1](u)
// and -2V = sum x^{g-k} wp[1,1,2k-1](u). Labels only, nothing transcendental
// is evaluated.
template <class K>
void print_wp_labels(const hj::MumfordDivisor<K>& d) {
    const int g = d.curve().genus();
    if (d.degree() != g) {
        std::cout << "wp-labels: class is special, labels undefined\n";
        return;
    }
    for (int k = 1; k <= g; ++k) {
        std::cout << "wp[1," << 2 * k - 1 << "] = " << K::to_string(-d.u().coeff(g - k)) << "\n";
    }
    for (int k = 1; k <= g; ++k) {
        std::cout << "wp[1,1," << 2 * k - 1 << "] = "
                  << K::to_string(-(d.curve().field().from_int(2) * d.v().coeff(g - k))) << "\n";
    }
}

template <class K>
hj::MumfordDivisor<K> reduce_any(const hj::Curve<K>& c,
                                 const std::variant<hj::PointDivisor<K>, hj::MumfordDivisor<K>>& div,
                                 const std::string& strategy) {
    if (std::holds_alternative<hj::MumfordDivisor<K>>(div)) {
        // Polynomial input carries no points; reduce through the
        // minimal-weight route regardless of the strategy flag.
        hj::PairForm<K> pf = hj::pairform_from_mumford(std::get<hj::MumfordDivisor<K>>(div));
        if (pf.excess() <= 0) return hj::mumford_from_pairform(pf);
        hj::MinWeightFn<K> r = hj::minweight_from_pair(pf);
        return hj::reduce_general(c, pf.f(), r).to_mumford();
    }
    const auto& pd = std::get<hj::PointDivisor<K>>(div);
    if (strategy == "direct") {
        hj::PointDivisor<K> dt = hj::truncate_involution(pd);
        if (dt.degree() < c.genus()) hj::raise(hj::errc::special_divisor, "divisor is special");
        hj::PairForm<K> pf = hj::pairform_from_points(dt);
        if (pf.excess() <= 0) return hj::mumford_from_pairform(pf);
        hj::MinWeightFn<K> r = hj::minweight_from_pair(pf);
        return hj::reduce_general(c, pf.f(), r).to_mumford();
    }
    hj::Strategy s = strategy == "shortest" ? hj::Strategy::shortest : hj::Strategy::by_g1;
    return hj::reduce_iterative(c, pd, s);
}

template <class K>
hj::MumfordDivisor<K> oracle_of(
    const std::variant<hj::PointDivisor<K>, hj::MumfordDivisor<K>>& div) {
    if (std::holds_alternative<hj::MumfordDivisor<K>>(div))
        return hj::cantor_reduce(std::get<hj::MumfordDivisor<K>>(div));
    return hj::cantor_reduce_points(std::get<hj::PointDivisor<K>>(div));
}

template <class K>
int run_with_field(const K& k, const Options& opt) {
    if (opt.command == "bench") {
        if constexpr (!K::is_prime_field) {
            hj::raise(hj::errc::parse_error, "bench needs a prime field");
        } else {
            hj::BenchConfig cfg;
            cfg.p = k.characteristic();
            auto [g0, g1] = parse_range(opt.genus_range);
            auto [m0, m1] = parse_range(opt.m_range);
            cfg.genus_min = g0;
            cfg.genus_max = g1;
            cfg.m_min = m0;
            cfg.m_max = m1;
            cfg.trials = opt.trials;
            cfg.seed = opt.seed;
            cfg.workers = opt.workers;
            std::cout << hj::bench_csv(hj::run_bench(cfg));
        }
        return 0;
    }

    nlohmann::json curve_json = load_json(opt.curve_file);
    hj::Curve<K> curve = hj::curve_from_json(k, curve_json);

    if (opt.command == "reduce" || opt.command == "oracle") {
        auto div = hj::divisor_from_json(curve, load_json(opt.divisor_file));
        if (opt.command == "oracle" && !opt.divisor_file2.empty()) {
            auto div2 = hj::divisor_from_json(curve, load_json(opt.divisor_file2));
            hj::MumfordDivisor<K> sum = hj::cantor_reduce(
                hj::cantor_compose(oracle_of<K>(div), oracle_of<K>(div2)));
            print_mumford(sum);
            return 0;
        }
        hj::MumfordDivisor<K> out =
            opt.command == "oracle" ? oracle_of<K>(div) : reduce_any(curve, div, opt.strategy);
        print_mumford(out);
        if (opt.wp_labels) print_wp_labels(out);
        if (opt.check_oracle) {
            bool match = out == oracle_of<K>(div);
            std::cout << "oracle: " << (match ? "MATCH" : "MISMATCH") << "\n";
            if (!match) return 1;
        }
        return 0;
    }

    if (opt.command == "add") {
        auto d1 = hj::divisor_from_json(curve, load_json(opt.divisor_file));
        auto d2 = hj::divisor_from_json(curve, load_json(opt.divisor_file2));
        auto as_pair = [&](const std::variant<hj::PointDivisor<K>, hj::MumfordDivisor<K>>& d) {
            if (std::holds_alternative<hj::MumfordDivisor<K>>(d))
                return hj::pairform_from_mumford(std::get<hj::MumfordDivisor<K>>(d));
            return hj::pairform_from_points(std::get<hj::PointDivisor<K>>(d));
        };
        hj::AddStats stats;
        hj::ReduceRoute route =
            opt.route == "iterative" ? hj::ReduceRoute::iterative : hj::ReduceRoute::general;
        hj::MumfordDivisor<K> sum = hj::add_divisors(as_pair(d1), as_pair(d2), &stats, route);
        print_mumford(sum);
        if (stats.cantor_compose || stats.oracle_reduce) std::cout << "fallback: cantor\n";
        if (opt.check_oracle) {
            hj::MumfordDivisor<K> ref = hj::cantor_reduce(
                hj::cantor_compose(oracle_of<K>(d1), oracle_of<K>(d2)));
            bool match = sum == ref;
            std::cout << "oracle: " << (match ? "MATCH" : "MISMATCH") << "\n";
            if (!match) return 1;
        }
        return 0;
    }

    if (opt.command == "dh") {
        auto div = hj::divisor_from_json(curve, load_json(opt.divisor_file));
        if (!std::holds_alternative<hj::PointDivisor<K>>(div))
            hj::raise(hj::errc::parse_error, "dh base must be a point divisor");
        hj::DhScenario sc = opt.scenario == "II" ? hj::DhScenario::II : hj::DhScenario::I;
        auto [sa, sb] =
            hj::dh_exchange(curve, std::get<hj::PointDivisor<K>>(div), opt.na, opt.nb, sc);
        print_mumford(sa, "shared_a: ");
        print_mumford(sb, "shared_b: ");
        std::cout << (sa == sb ? "EQUAL" : "UNEQUAL") << "\n";
        return sa == sb ? 0 : 1;
    }

    hj::raise(hj::errc::parse_error, "unknown command '" + opt.command + "'");
}

int run_selftest() {
    using K = hj::RatField;
    K q;
    int fails = 0;
    auto check = [&](bool ok, const std::string& name) {
        std::cout << (ok ? "[ok] " : "[FAIL] ") << name << "\n";
        if (!ok) ++fails;
    };

    hj::Curve<K> c = hj::Curve<K>::from_lambdas(q, 1, {{6, q.one()}});
    auto p0 = c.point(q.from_int(0), q.from_int(1));
    auto p1 = c.point(q.from_int(2), q.from_int(3));

    auto chord = hj::reduce_gplus1_distinct(c, {p0, p1}).to_mumford();
    check(hj::to_string(chord.u()) == "x + 1" && chord.v().is_zero(), "chord fixture");
    auto tangent = hj::reduce_gplus1_duplicated(c, p1, {}).to_mumford();
    check(hj::to_string(tangent.u()) == "x" && hj::to_string(tangent.v()) == "1",
          "tangent fixture");
    auto taylor = hj::reduce_gplus1_single(c, p1).to_mumford();
    check(taylor == tangent, "taylor route matches tangent");
    auto oracle = hj::cantor_reduce_points(hj::PointDivisor<K>::from_points(c, {p0, p1}));
    check(chord == oracle, "oracle agreement");

    hj::FpField k(97);
    hj::Curve<hj::FpField> c2 = hj::Curve<hj::FpField>::from_lambdas(k, 2, {{10, k.one()}});
    int mismatches = 0;
    for (int t = 0; t < 20; ++t) {
        std::vector<hj::AffinePoint<hj::FpField>> pts;
        std::uint64_t salt = 100 + static_cast<std::uint64_t>(t) * 131;
        while (pts.size() < 3) {
            auto p = hj::random_point(c2, salt++);
            bool fresh = true;
            for (const auto& qq : pts)
                if (qq.x == p.x) fresh = false;
            if (fresh) pts.push_back(p);
        }
        auto r = hj::reduce_gplus1_distinct(c2, pts).to_mumford();
        auto o = hj::cantor_reduce_points(hj::PointDivisor<hj::FpField>::from_points(c2, pts));
        if (!(r == o)) ++mismatches;
    }
    check(mismatches == 0, "genus-2 random reductions vs oracle");

    std::cout << "selftest: " << (fails == 0 ? "PASS" : "FAIL") << "\n";
    return fails == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact divisor-class arithmetic on hyperelliptic curves y^2 = P(x)"};
    app.require_subcommand(1);

    auto* reduce = app.add_subcommand("reduce", "reduce a divisor to its canonical class form");
    reduce->add_option("curve", opt.curve_file, "curve config (JSON)")->required();
    reduce->add_option("divisor", opt.divisor_file, "divisor file (JSON)")->required();
    reduce->add_option("--strategy", opt.strategy, "by_g1 | shortest | direct")
        ->check(CLI::IsMember({"by_g1", "shortest", "direct"}));
    reduce->add_flag("--check-oracle", opt.check_oracle, "cross-check against the classical route");
    reduce->add_flag("--wp-labels", opt.wp_labels, "annotate coefficients as wp function values");

    auto* add = app.add_subcommand("add", "add two divisors");
    add->add_option("curve", opt.curve_file)->required();
    add->add_option("d1", opt.divisor_file)->required();
    add->add_option("d2", opt.divisor_file2)->required();
    add->add_option("--route", opt.route, "general | iterative")
        ->check(CLI::IsMember({"general", "iterative"}));
    add->add_flag("--check-oracle", opt.check_oracle);

    auto* dh = app.add_subcommand("dh", "Diffie-Hellman exchange demo");
    dh->add_option("curve", opt.curve_file)->required();
    dh->add_option("base", opt.divisor_file)->required();
    dh->add_option("--scenario", opt.scenario, "I | II")->check(CLI::IsMember({"I", "II"}));
    dh->add_option("--na", opt.na, "Alice's secret scalar")->required();
    dh->add_option("--nb", opt.nb, "Bob's secret scalar")->required();

    auto* oracle = app.add_subcommand("oracle", "classical reduction (and addition) only");
    oracle->add_option("curve", opt.curve_file)->required();
    oracle->add_option("d1", opt.divisor_file)->required();
    oracle->add_option("d2", opt.divisor_file2, "optional second divisor to add");

    auto* bench = app.add_subcommand("bench", "strategy benchmark, CSV on stdout");
    bench->add_option("--field", opt.field, "prime field, e.g. GF(1009)");
    bench->add_option("--genus-range", opt.genus_range, "a:b");
    bench->add_option("--m-range", opt.m_range, "a:b");
    bench->add_option("--trials", opt.trials);
    bench->add_option("--seed", opt.seed);
    bench->add_option("--workers", opt.workers, "0 = hardware concurrency");

    app.add_subcommand("selftest", "run the built-in fixtures");

    CLI11_PARSE(app, argc, argv);
    opt.command = app.get_subcommands().front()->get_name();

    if (const char* env_seed = std::getenv("HYPERJAC_SEED")) {
        try {
            opt.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            std::cerr << "error: bad HYPERJAC_SEED\n";
            return 2;
        }
    }

    try {
        if (opt.command == "selftest") return run_selftest();

        hj::FieldSpec fs;
        if (opt.command == "bench") {
            fs = hj::parse_field_spec(opt.field);
        } else {
            fs = hj::field_spec_of_curve_json(load_json(opt.curve_file));
        }
        if (fs.rational) {
            hj::RatField q;
            return run_with_field(q, opt);
        }
        hj::FpField k(fs.p);
        return run_with_field(k, opt);
    } catch (const hj::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == hj::errc::parse_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
