#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "threeterm/errors.hpp"
#include "threeterm/report.hpp"
#include "threeterm/sweep.hpp"

using namespace threeterm;

TEST_CASE("smallest sweep by hand") {
    // Paths to -4, -2, 0, 2, 4; steps -4 and 0 have weights -2 and 2 and are dropped.
    auto report = sweep({2, 2, 4, 4, 1});
    CHECK(report.totals.generated == 5);
    CHECK(report.totals.admissible == 3);
    CHECK(report.totals.stable == 1);
    CHECK(report.certificates_verified == 2);
    CHECK(report.unstable_three_term_violations == 1);
    REQUIRE(report.unstable_witnesses.size() == 1);
    CHECK(report.unstable_witnesses[0] == std::vector<int>{0, 4});
    CHECK(report.pass());
    REQUIRE(report.per_length.count(2));
    CHECK(report.per_length.at(2).generated == 5);
}

TEST_CASE("moderate sweep has no violations") {
    auto report = sweep({2, 5, 8, 10, 2});
    CHECK(report.pass());
    CHECK(report.violations.empty());
    CHECK(report.totals.stable > 0);
    CHECK(report.certificates_verified > report.totals.stable);
    std::int64_t generated = 0;
    for (const auto& [n, h] : report.per_length) generated += h.generated;
    CHECK(generated == report.totals.generated);
}

TEST_CASE("sweep output is independent of the worker count") {
    SweepParams one{2, 6, 8, 8, 1};
    SweepParams many = one;
    many.workers = 8;
    auto a = to_json(sweep(one), false);
    auto b = to_json(sweep(many), false);
    CHECK(a.dump() == b.dump());
    CHECK_FALSE(a.contains("timing"));
    CHECK(to_json(sweep(one)).contains("timing"));
}

TEST_CASE("per-chain checks") {
    std::vector<SweepViolation> violations;
    CHECK(check_stable_chain(RootSequence({4, 2, 0, 4, 2, 0, -2}), violations) == 4);
    CHECK(violations.empty());
    // Pairing refuses unstable input rather than reporting a counterexample.
    CHECK_THROWS_AS(check_stable_chain(RootSequence({0, 4}), violations), HypothesisViolation);
}

TEST_CASE("sweep parameter validation") {
    CHECK_THROWS_AS(sweep({1, 3, 2, 2, 1}), MalformedInput);
    CHECK_THROWS_AS(sweep({2, 3, 3, 2, 1}), MalformedInput);
    CHECK_THROWS_AS(sweep({2, 3, 2, 2, 0}), MalformedInput);
}

TEST_CASE("worker count from the environment") {
    ::setenv("HIGGS_THREETERM_WORKERS", "6", 1);
    CHECK(default_worker_count() == 6);
    ::setenv("HIGGS_THREETERM_WORKERS", "zero", 1);
    CHECK(default_worker_count() == 1);
    ::unsetenv("HIGGS_THREETERM_WORKERS");
    CHECK(default_worker_count() == 1);
}
