// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <variant>

#include "rootfrac/interval.hpp"
#include "rootfrac/kernel.hpp"
#include "rootfrac/theta.hpp"

namespace rootfrac {

// ---------------------------------------------------------------------------
// Global precision cap (read-only during computation).

/// Current cap in bits; escalation beyond it surfaces Undecided or throws.
long precision_cap();
void set_precision_cap(long bits);
constexpr long kDefaultPrecisionCap = 1L << 20;

// ---------------------------------------------------------------------------
// Certified floor results.

struct FloorExact {
    mpz_class value;
};
struct FloorInfinite {};
struct FloorUndecided {
    mpq_class width;  // interval width when the cap was hit
};

using FloorResult = std::variant<FloorExact, FloorInfinite, FloorUndecided>;

inline bool is_exact(const FloorResult& r) { return std::holds_alternative<FloorExact>(r); }
inline bool is_infinite(const FloorResult& r) {
    return std::holds_alternative<FloorInfinite>(r);
}
inline const mpz_class& exact_value(const FloorResult& r) {
    return std::get<FloorExact>(r).value;
}

// ---------------------------------------------------------------------------
// Evaluators: the escalation engine works on any certified enclosure source.

using EncloseFn = std::function<RealInterval(long bits)>;

/// A real number handed to the escalation engine: an enclosure callback plus
/// an optional exact rational identity (the decidability fast path).
struct Evaluator {
    EncloseFn enclose;
    std::optional<mpq_class> exact;
};

/// Evaluator for theta^{1/n}.
Evaluator theta_root_evaluator(const ThetaExpr& theta, long n);
/// Evaluator for log(theta); exact k/l for ExpRational.
Evaluator log_theta_evaluator(const ThetaExpr& theta);

// ---------------------------------------------------------------------------
// Public operations.

/// Enclosure of theta^{1/n} snapped to the dyadic grid 2^-(bits+1), so
/// enclosures at increasing precision are nested.  Throws
/// PrecisionCapExceeded if the cap is hit first.
RealInterval nth_root_interval(const ThetaExpr& theta, long n, long bits);

/// [1/{theta^{1/n}}]: Infinite iff theta^{1/n} is an integer, Exact via the
/// rational fast path or interval escalation, Undecided only at the cap.
FloorResult certified_floor_reciprocal_frac(const ThetaExpr& theta, long n);

/// Same engine for an arbitrary evaluator (used by m_custom).
FloorResult floor_reciprocal_frac(const Evaluator& ev, long start_bits);

/// Floor of the reciprocal of the distance to the nearest integer.
FloorResult floor_reciprocal_nearest(const Evaluator& ev, long start_bits);

/// Certified [value] for an evaluator whose value is not an exact integer
/// unless ev.exact says so.  nullopt when the cap is hit.
std::optional<mpz_class> certified_floor(const Evaluator& ev, long start_bits);

/// Certified three-way comparison of the evaluator's value against an exact
/// rational.  Escalates; equality is only reported from the exact path.
/// Returns -1, 0, +1; nullopt when the cap is hit undecided.
std::optional<int> certified_cmp(const Evaluator& ev, const mpq_class& q, long start_bits);

/// Starting precision per the doubling schedule.
long default_start_bits(const ThetaExpr& theta, long n);

}  // namespace rootfrac
