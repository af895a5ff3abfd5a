// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>

#include "rootfrac/interval.hpp"

namespace rootfrac {

// Low-level certified enclosures.  Every function returns an exact rational
// interval [lo, hi] that provably contains the named real value, with
// hi - lo <= 2^-bits.  No rounding step is ever trusted: lower bounds come
// from floor divisions, upper bounds from explicit slack terms.

/// Largest r >= 0 with r^n <= a.  Newton iteration on integers, starting
/// from a power-of-two overestimate; a >= 0, n >= 1.
mpz_class iroot_floor(const mpz_class& a, unsigned long n);

/// The rational a/b with (a/b)^n = p/q, when p and q are both perfect
/// nth powers; absent otherwise (and then (p/q)^{1/n} is irrational).
/// Requires gcd(p, q) = 1, p > 0, q > 0.
std::optional<mpq_class> exact_rational_root(const mpz_class& p, const mpz_class& q,
                                             unsigned long n);
std::optional<mpq_class> exact_rational_root(const mpq_class& v, unsigned long n);

/// pi via Machin's formula; alternating-series tail bounds.
RealInterval pi_enclosure(long bits);

/// e^x for rational x >= 0.  Series on [0, 1/2] with floor-division error
/// tracking, then repeated interval squaring.
RealInterval exp_enclosure(const mpq_class& x, long bits);

/// log x for rational x > 0.  Power-of-two reduction to [3/4, 3/2), then
/// 2*atanh((t-1)/(t+1)).
RealInterval log_enclosure(const mpq_class& x, long bits);
/// log over an interval (monotone): [log(x.lo).lo, log(x.hi).hi].
RealInterval log_enclosure(const RealInterval& x, long bits);

/// x^{1/n} for rational x > 0: integer nth root of the shifted numerator.
/// Exact point interval when the root is rational.
RealInterval root_enclosure(const mpq_class& x, unsigned long n, long bits);
/// Outward-rounded root of an enclosure of a positive real.
RealInterval root_enclosure(const RealInterval& x, unsigned long n, long bits);

}  // namespace rootfrac
