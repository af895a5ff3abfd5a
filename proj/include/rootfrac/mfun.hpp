// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

#include "rootfrac/exact.hpp"
#include "rootfrac/theta.hpp"

namespace rootfrac {

/// M_theta(n): a positive integer, or Infinite when {theta^{1/n}} = 0.
struct MValue {
    std::optional<mpz_class> finite;  // nullopt == Infinite

    bool is_infinite() const { return !finite.has_value(); }
    const mpz_class& value() const { return *finite; }
    bool operator==(const MValue&) const = default;

    static MValue infinite() { return MValue{std::nullopt}; }
    static MValue of(long v) { return MValue{mpz_class(v)}; }
};

struct MSequence {
    ThetaExpr theta;
    long start = 1;
    std::vector<MValue> values;  // values[i] is M(start + i)
    long n0_marker = 0;          // N0(theta)

    const MValue& at(long n) const { return values.at(static_cast<size_t>(n - start)); }
};

/// M_theta(n) = [1/{theta^{1/n}}].  Requires theta > 0, theta != 1.
/// Throws PrecisionCapExceeded if escalation hits the cap.
MValue m_theta(const ThetaExpr& theta, long n);

/// Smallest integer n with n > log theta / log 2; requires theta > 1.
long n0(const ThetaExpr& theta);

/// M values for n in [from, to], with the N0 marker filled in.
MSequence m_sequence(const ThetaExpr& theta, long from, long to);

/// M'_theta(n) = [1/||theta^{1/n}||] (distance to the nearest integer).
MValue m_prime_theta(const ThetaExpr& theta, long n);

/// The contiguous range { n > log theta/log 2 : M_theta(n) = x }, via the
/// inverse characterization g(x) log theta <= n < g(x+1) log theta.
/// Requires theta > 1, x >= 1.
struct IntegerRange {
    long lo = 0, hi = -1;  // empty when hi < lo
    bool empty() const { return hi < lo; }
    bool contains(long n) const { return lo <= n && n <= hi; }
};
IntegerRange inverse_range(const ThetaExpr& theta, long x);

/// A custom sequence: for each index n an evaluator of theta_n.
using SequenceEvaluator = std::function<Evaluator(long n)>;

/// Built-in sequence theta_n = n^{1/n}.
SequenceEvaluator nth_root_of_n_sequence();
/// The sequence theta_n = theta^{1/n} (so M_A(n) = M_theta(n)).
SequenceEvaluator theta_root_sequence(const ThetaExpr& theta);

/// M_A(n) = [1/{theta_n}] via the same escalation engine.
MValue m_custom(const SequenceEvaluator& seq, long n);

/// Least n <= search_cap with M_A(n) = x, or absent.
std::optional<long> smallest_n_with_value(const SequenceEvaluator& seq, long x,
                                          long search_cap);

}  // namespace rootfrac
