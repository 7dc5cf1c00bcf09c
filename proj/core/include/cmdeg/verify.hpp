#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmdeg/order.hpp"

// Self-check harness: cross-validates the closed-form degree formulas against
// brute-force orbit enumeration, the ideal-lattice oracle, class-number
// recounts, and internal consistency identities, over configurable sweeps.

namespace cmdeg {

struct VerifyConfig {
    // Orbit-enumeration sweep (closed forms vs. exhaustive orbit counts).
    std::int64_t max_abs_delta = 120;
    std::int64_t max_n = 36;
    std::int64_t oracle_cap = 64;  // hard ceiling on enumerated level
    // Rational-isogeny existence triangle (criterion vs. lattice oracle).
    std::int64_t triangle_abs_delta = 200;
    std::int64_t triangle_max_n = 100;
    // Depth bounds vs. empirical square detection.
    std::int64_t depth_abs_delta = 300;
    std::int64_t depth_max_ell = 13;
    std::int64_t depth_square_horizon = 12;
    // Rational/base-change factor agreement sweeps.
    std::int64_t qf_agreement_abs_delta = 300;
    std::int64_t qf_agreement_max_level = 64;
    // Class-number recount range.
    std::int64_t recount_abs_delta = 4000;
    // Relative-degree coincidence range.
    std::int64_t coincidence_abs_delta = 400;
    int workers = 1;
    // Test-harness hook: perturb one closed form (off by one) so the
    // failure-reporting and exit-code paths can be exercised end to end.
    bool inject_fault = false;
};

struct SuiteResult {
    std::string name;
    std::int64_t checked = 0;
    std::int64_t failed = 0;
    std::vector<std::string> sample_failures;  // at most a handful, for triage
    bool passed() const { return failed == 0; }
};

// All imaginary quadratic orders with |discriminant| <= cap, ordered by
// (|delta|, f).
std::vector<Order> orders_up_to(std::int64_t cap);

std::vector<SuiteResult> run_verify(const VerifyConfig& config);

}  // namespace cmdeg
