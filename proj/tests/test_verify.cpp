#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"

#include "cmdeg/verify.hpp"

using namespace cmdeg;

namespace {
// Bounds small enough for a unit test, large enough that every suite has work.
VerifyConfig reduced_config() {
    VerifyConfig config;
    config.max_abs_delta = 48;
    config.max_n = 9;
    config.oracle_cap = 64;
    config.triangle_abs_delta = 60;
    config.triangle_max_n = 30;
    config.depth_abs_delta = 80;
    config.depth_max_ell = 7;
    config.depth_square_horizon = 8;
    config.qf_agreement_abs_delta = 80;
    config.qf_agreement_max_level = 24;
    config.recount_abs_delta = 200;
    config.coincidence_abs_delta = 120;
    config.workers = 4;
    return config;
}
}  // namespace

TEST_CASE("orders_up_to enumerates every order once, sorted") {
    const std::vector<Order> orders = orders_up_to(48);
    CHECK(!orders.empty());
    CHECK(orders.front().delta == -3);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        const Order& order = orders[i];
        CHECK(order.delta == order.delta_k * order.f * order.f);
        CHECK(order.delta >= -48);
        if (i > 0) {
            const Order& prev = orders[i - 1];
            CHECK((-prev.delta < -order.delta ||
                   (prev.delta == order.delta && prev.f < order.f)));
        }
    }
    // Every negative integer congruent to 0 or 1 mod 4 is the discriminant of
    // exactly one order, and 3 <= d <= 48 has twelve residues in each class.
    CHECK(orders.size() == 24);
}

TEST_CASE("reduced verify run is green across all suites") {
    const std::vector<SuiteResult> results = run_verify(reduced_config());
    CHECK(results.size() == 19);
    for (const SuiteResult& suite : results) {
        CAPTURE(suite.name);
        CHECK(suite.checked > 0);
        CHECK(suite.failed == 0);
        CHECK(suite.passed());
        CHECK(suite.sample_failures.empty());
    }
}

TEST_CASE("fault injection surfaces failures with samples") {
    VerifyConfig config = reduced_config();
    config.inject_fault = true;
    const std::vector<SuiteResult> results = run_verify(config);
    std::int64_t failed_suites = 0;
    for (const SuiteResult& suite : results) {
        if (suite.failed > 0) {
            ++failed_suites;
            CHECK(!suite.sample_failures.empty());
            CHECK(!suite.passed());
        }
    }
    CHECK(failed_suites > 0);
}

TEST_CASE("verify rejects nonsense bounds") {
    VerifyConfig config = reduced_config();
    config.max_abs_delta = 2;  // no order exists above -3
    CHECK_THROWS_AS(run_verify(config), invalid_input);

    config = reduced_config();
    config.workers = 0;
    CHECK_THROWS_AS(run_verify(config), invalid_input);

    config = reduced_config();
    config.max_n = 0;
    CHECK_THROWS_AS(run_verify(config), invalid_input);
}
