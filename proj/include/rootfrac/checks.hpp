// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "rootfrac/bounds.hpp"
#include "rootfrac/periodic.hpp"
#include "rootfrac/stats.hpp"
#include "rootfrac/theta.hpp"

namespace rootfrac {

struct SuiteResult {
    long passed = 0;
    long failed = 0;
    std::vector<std::string> lines;  // failure details plus summary lines

    bool ok() const { return failed == 0; }
    void note(bool pass, const std::string& detail);
    void merge(const SuiteResult& other);
};

/// The bases the randomized sweeps draw from.
std::vector<ThetaExpr> sweep_theta_set();

/// Seed-fixed randomized sweep over all six inequality families:
/// g bounds, g difference, both exponential comparisons, the main
/// inequality and the gap bound.  `samples` per family.
SuiteResult run_inequality_sweep(unsigned long seed, long samples);

/// Detect linear periodicity on a window of certified values and verify the
/// certificate out to `horizon`.
SuiteResult run_periodicity_suite(const ThetaExpr& theta, long window, long horizon);

/// Beatty membership: every finite M(n), n in (N0, n_max], equals one of
/// [n/log theta -+ 1/2]; for e^{k/l} the exceptional n all sit below the
/// periodicity threshold.
SuiteResult run_beatty_suite(const ThetaExpr& theta, long n_max);

/// Window statistics: binary gaps for theta=2, histogram conservation,
/// density comparison for theta=pi.
SuiteResult run_stats_suite(long gap_window, long density_window);

}  // namespace rootfrac
