#include <catch2/catch_amalgamated.hpp>

#include "hyperjac/bench.hpp"
#include "support.hpp"

using namespace hjtest;

TEST_CASE("bench workload is independent of the worker count") {
    BenchConfig cfg;
    cfg.genus_min = 1;
    cfg.genus_max = 2;
    cfg.m_min = 1;
    cfg.m_max = 2;
    cfg.trials = 4;
    cfg.seed = 99;

    cfg.workers = 1;
    auto serial = run_bench(cfg);
    cfg.workers = 4;
    auto threaded = run_bench(cfg);

    REQUIRE(serial.size() == threaded.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].genus == threaded[i].genus);
        CHECK(serial[i].m == threaded[i].m);
        CHECK(serial[i].strategy == threaded[i].strategy);
        CHECK(serial[i].digest == threaded[i].digest);
        CHECK(serial[i].fallbacks == threaded[i].fallbacks);
        CHECK(serial[i].mismatches == 0);
        CHECK(threaded[i].mismatches == 0);
    }

    // all four strategies of a cell share one workload digest
    for (std::size_t i = 0; i + 3 < serial.size(); i += 4) {
        CHECK(serial[i].digest == serial[i + 1].digest);
        CHECK(serial[i].digest == serial[i + 2].digest);
        CHECK(serial[i].digest == serial[i + 3].digest);
    }
}

TEST_CASE("bench emits no rows for an empty trial budget") {
    BenchConfig cfg;
    cfg.trials = 0;
    CHECK(run_bench(cfg).empty());
}
