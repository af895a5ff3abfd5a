// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rootfrac/exact.hpp"
#include "rootfrac/theta.hpp"

namespace rootfrac {

enum class Verdict { Holds, Fails, NotApplicable };

/// Certified verdict on one named inequality.  `margin` is a dyadic lower
/// bound on the separation rhs - lhs (negative when the inequality fails).
struct BoundReport {
    std::string name;
    std::string params;
    RealInterval lhs;
    RealInterval rhs;
    Verdict verdict = Verdict::NotApplicable;
    mpq_class margin;

    bool holds() const { return verdict == Verdict::Holds; }
    /// One-line rendering: name, params, verdict, decimal margin.
    std::string render() const;
};

/// g(x) = 1/log(1 + 1/x) as a certified enclosure; x >= 1 rational.
RealInterval g_interval(const mpq_class& x, long bits);

/// x + 1/2 - 1/x <= g(x) < x + 1/2.
BoundReport check_g_bounds(const mpq_class& x);
/// y - x - 1/y < g(y) - g(x) < y - x + 1/x, for y >= x >= 1.
BoundReport check_g_difference(const mpq_class& x, const mpq_class& y);

/// (1+x/n)^n < (1+x/(n+1))^{n+1} < e^x  (x > 0, n >= 1), and
/// e^x < (1+x/n)^{n+1} < (1+x/(n-1))^n  (0 < x <= 1, n >= 2).
/// The second report is NotApplicable outside its hypothesis.
std::pair<BoundReport, BoundReport> check_exp_inequalities(const mpq_class& x, long n);

/// (x + 1/2 - 1/x) log theta <= n < (x + 3/2) log theta with x = M_theta(n).
BoundReport check_main_ineq(const ThetaExpr& theta, long n);

/// M_theta(n2) - M_theta(n1) < (n2-n1)/log theta + 3/2.
BoundReport check_gap_bound(const ThetaExpr& theta, long n1, long n2);

struct StrictIncreaseResult {
    bool strictly_increasing = true;
    long repeat_at = 0;  // first n with M(n) = M(n+1), when found
};
/// Scan [n_from, n_to] for a repeated value.
StrictIncreaseResult check_strict_increase(const ThetaExpr& theta, long n_from, long n_to);

/// B_0, B_1, ..., B_{count-1} as exact rationals (B_1 = -1/2).
std::vector<mpq_class> bernoulli_numbers(long count);

/// Partial Bernoulli series for 1/(theta^{1/n} - 1):
/// n/log theta - 1/2 + sum_{r=1..terms} B_{2r}/(2r)! (log theta)^{2r-1}/n^{2r-1}.
/// terms = 0 carries a rigorous +-1/2 band (for log theta <= n) or a crude
/// one-sided band; terms >= 1 widens by twice the first omitted term, which
/// is a labeled heuristic and never feeds a certified floor.
RealInterval bernoulli_approx(const ThetaExpr& theta, long n, long terms);

}  // namespace rootfrac
