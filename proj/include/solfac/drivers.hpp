#pragma once

// Library-level drivers behind the `verify` and `crosscheck` subcommands.
// Both run their checks against fixed thresholds and return the process exit
// code together with a JSON report.
//
// Exit codes: 0 all checks passed, 1 validation error, 2 numerical failure,
// 3 threshold violation.  No other codes are produced.

#include <string>

#include "solfac/config.hpp"

namespace solfac {

struct DriverResult {
    int exit_code = 0;
    std::string report_json;  // UTF-8, schema_version 1
};

enum class VerifySuite { Nls, Hm, Zcc, All };

// Thresholds applied by run_verify / run_crosscheck.
struct VerifyThresholds {
    double order_min = 1.6;        // observed convergence order window
    double order_max = 2.4;
    double zero_residual = 1e-12;  // norms below this count as identically zero
    double unit_norm = 1e-10;
    double zcc_top_power = 1e-12;  // the z^3 coefficient must vanish
    double mass_spread = 1e-6;     // slice-mass spread (skipped without boundary decay)
    double crosscheck_rel = 1e-8;  // determinant route vs linear solve
    double closed_form_abs = 1e-9; // n = 1 closed form vs linear solve
};

// Runs the selected residual suites on cfg.grid and its half-step refinement
// (an extra quarter-step level when extra_refine is set) and checks observed
// orders, unit norms and the vanishing top ZCC power.
DriverResult run_verify(const RunConfig& cfg, VerifySuite suite, bool extra_refine = false,
                        const VerifyThresholds& thresholds = {});

// Tanh-term sign of the closed one-soliton form used in the comparison.
// Minus is the convention this library pins down; Plus exists as a negative
// control and must fail the closed-form check.
enum class ClosedFormTanhSign { Minus, Plus };

// Compares the determinant quotient against the linear-solve b_1 over the
// grid, and (n = 1 only) the solver output against the closed form.
DriverResult run_crosscheck(const RunConfig& cfg, bool extra_refine = false,
                            ClosedFormTanhSign sign = ClosedFormTanhSign::Minus,
                            const VerifyThresholds& thresholds = {});

}  // namespace solfac
