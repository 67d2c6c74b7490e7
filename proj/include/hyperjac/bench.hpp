#ifndef HYPERJAC_BENCH_HPP
#define HYPERJAC_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hyperjac/cantor.hpp"
#include "hyperjac/curve.hpp"
#include "hyperjac/divisor.hpp"
#include "hyperjac/fp.hpp"
#include "hyperjac/reduce_general.hpp"
#include "hyperjac/reduce_iter.hpp"
#include "hyperjac/rng.hpp"

namespace hyperjac {

// Strategy comparison over seeded random workloads. The workload (curve and
// point sets) is a pure function of (seed, genus, m, trial), so reruns and
// different worker counts see identical inputs; only the timings vary. The
// digest column fingerprints the inputs for exactly that check.
struct BenchConfig {
    int genus_min = 1;
    int genus_max = 5;
    int m_min = 1;
    int m_max = 6;
    std::uint64_t p = 1009;
    int trials = 3;
    std::uint64_t seed = 1;
    unsigned workers = 0;          // 0: hardware concurrency
};

struct BenchRow {
    int genus = 0;
    int m = 0;
    std::string strategy;
    int trials = 0;
    std::uint64_t total_ns = 0;
    int fallbacks = 0;
    int mismatches = 0;
    std::uint64_t digest = 0;
};

namespace detail {

inline Curve<FpField> bench_curve(const FpField& k, int genus, std::uint64_t seed) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(genus) * 7919));
    for (;;) {
        std::map<int, Fp> lambda;
        for (int idx = 2; idx <= 4 * genus + 2; idx += 2) {
            lambda.emplace(idx, Fp(rng.below(k.p), k.p));
        }
        try {
            return Curve<FpField>::from_lambdas(k, genus, lambda);
        } catch (const Error& e) {
            if (e.code() != errc::singular_curve) throw;
        }
    }
}

inline std::vector<AffinePoint<FpField>> bench_points(const Curve<FpField>& c, int count,
                                                      std::uint64_t seed) {
    std::vector<AffinePoint<FpField>> pts;
    std::uint64_t salt = 0;
    while (static_cast<int>(pts.size()) < count) {
        AffinePoint<FpField> p = random_point(c, mix_seed(seed, salt++));
        bool fresh = true;
        for (const auto& q : pts) {
            if (q.x == p.x) { fresh = false; break; }
        }
        if (fresh) pts.push_back(p);
    }
    return pts;
}

inline std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

struct TrialOutcome {
    std::uint64_t ns = 0;
    int fallbacks = 0;
    int mismatches = 0;
    std::uint64_t digest = 0;
};

} // namespace detail

inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    FpField k(cfg.p);
    std::vector<BenchRow> rows;
    const char* strategies[] = {"by_g1", "shortest", "direct", "oracle"};

    unsigned workers = cfg.workers ? cfg.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (cfg.trials <= 0) return rows;

    for (int g = cfg.genus_min; g <= cfg.genus_max; ++g) {
        Curve<FpField> curve = detail::bench_curve(k, g, cfg.seed);
        for (int m = cfg.m_min; m <= cfg.m_max; ++m) {
            std::vector<std::vector<detail::TrialOutcome>> outcomes(
                4, std::vector<detail::TrialOutcome>(static_cast<std::size_t>(cfg.trials)));

            auto run_range = [&](int first, int step) {
                for (int t = first; t < cfg.trials; t += step) {
                    std::uint64_t tseed = mix_seed(cfg.seed, (static_cast<std::uint64_t>(g) << 40) ^
                                                                (static_cast<std::uint64_t>(m) << 20) ^
                                                                static_cast<std::uint64_t>(t));
                    auto pts = detail::bench_points(curve, g + m, tseed);
                    std::uint64_t digest = 0xcbf29ce484222325ull;
                    for (const auto& p : pts) {
                        digest = detail::fnv_mix(digest, p.x.value());
                        digest = detail::fnv_mix(digest, p.y.value());
                    }
                    PointDivisor<FpField> div = PointDivisor<FpField>::from_points(curve, pts);

                    MumfordDivisor<FpField> reference = cantor_reduce_points(div);
                    for (int s = 0; s < 4; ++s) {
                        detail::TrialOutcome& out = outcomes[static_cast<std::size_t>(s)]
                                                            [static_cast<std::size_t>(t)];
                        out.digest = digest;
                        IterStats st;
                        int direct_fallbacks = 0;
                        auto t0 = std::chrono::steady_clock::now();
                        MumfordDivisor<FpField> result = [&] {
                            switch (s) {
                                case 0: return reduce_iterative(curve, div, Strategy::by_g1, &st);
                                case 1: return reduce_iterative(curve, div, Strategy::shortest, &st);
                                case 2:
                                    try {
                                        MinWeightFn<FpField> r = minweight_from_points(curve, pts);
                                        Poly<FpField> f = detail::linear_product(
                                            k, detail::x_coords(pts), -1);
                                        return reduce_general(curve, f, r).to_mumford();
                                    } catch (const Error& e) {
                                        // degenerate class: the direct route's
                                        // genericity hypothesis fails
                                        if (e.code() != errc::non_coprime_gamma_h &&
                                            e.code() != errc::singular_system)
                                            throw;
                                        ++direct_fallbacks;
                                        return cantor_reduce_points(div);
                                    }
                                default: return cantor_reduce_points(div);
                            }
                        }();
                        auto t1 = std::chrono::steady_clock::now();
                        out.ns = static_cast<std::uint64_t>(
                            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
                        out.fallbacks = st.cantor_seeds + st.collision_fallbacks + direct_fallbacks;
                        out.mismatches = result == reference ? 0 : 1;
                    }
                }
            };

            if (workers == 1 || cfg.trials <= 1) {
                run_range(0, 1);
            } else {
                std::vector<std::thread> pool;
                unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(cfg.trials));
                pool.reserve(n);
                for (unsigned w = 0; w < n; ++w) {
                    pool.emplace_back(run_range, static_cast<int>(w), static_cast<int>(n));
                }
                for (auto& th : pool) th.join();
            }

            for (int s = 0; s < 4; ++s) {
                BenchRow row;
                row.genus = g;
                row.m = m;
                row.strategy = strategies[s];
                row.trials = cfg.trials;
                std::uint64_t digest = 0xcbf29ce484222325ull;
                for (const auto& out : outcomes[static_cast<std::size_t>(s)]) {
                    row.total_ns += out.ns;
                    row.fallbacks += out.fallbacks;
                    row.mismatches += out.mismatches;
                    digest = detail::fnv_mix(digest, out.digest);
                }
                row.digest = cfg.trials ? digest : 0;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "genus,m,strategy,trials,total_ns,fallbacks,mismatches,workload_digest\n";
    for (const auto& r : rows) {
        out << r.genus << ',' << r.m << ',' << r.strategy << ',' << r.trials << ',' << r.total_ns
            << ',' << r.fallbacks << ',' << r.mismatches << ',' << r.digest << '\n';
    }
    return out.str();
}

} // namespace hyperjac

#endif
