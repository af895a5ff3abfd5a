// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/exact.hpp"

#include <atomic>

#include "rootfrac/errors.hpp"

namespace rootfrac {

namespace {
std::atomic<long> g_precision_cap{kDefaultPrecisionCap};
}

long precision_cap() { return g_precision_cap.load(); }

void set_precision_cap(long bits) {
    if (bits < 64) throw Error("precision cap below 64 bits is unusable");
    g_precision_cap.store(bits);
}

long default_start_bits(const ThetaExpr& theta, long n) {
    long b = 64;
    long m = n;
    while (m > 1) {
        ++b;
        m = (m + 1) / 2;
    }
    if (theta.is_rational_valued())
        b += static_cast<long>(mpz_sizeinbase(theta.rational_value().get_num_mpz_t(), 2));
    return b;
}

Evaluator theta_root_evaluator(const ThetaExpr& theta, long n) {
    if (n < 1) throw Error("n must be >= 1");
    switch (theta.kind()) {
        case ThetaExpr::Kind::Rational:
        case ThetaExpr::Kind::DecimalLiteral: {
            mpq_class v = theta.rational_value();
            Evaluator ev;
            ev.exact = exact_rational_root(v, static_cast<unsigned long>(n));
            ev.enclose = [v, n](long bits) {
                return root_enclosure(v, static_cast<unsigned long>(n), bits);
            };
            return ev;
        }
        case ThetaExpr::Kind::ExpRational: {
            mpq_class x(theta.exp_num(), theta.exp_den() * n);
            x.canonicalize();
            Evaluator ev;
            ev.enclose = [x](long bits) { return exp_enclosure(x, bits); };
            return ev;
        }
        case ThetaExpr::Kind::Pi: {
            Evaluator ev;
            if (n == 1) {
                ev.enclose = [](long bits) { return pi_enclosure(bits); };
            } else {
                ev.enclose = [n](long bits) {
                    return root_enclosure(pi_enclosure(bits + 4),
                                          static_cast<unsigned long>(n), bits);
                };
            }
            return ev;
        }
    }
    throw Error("unreachable theta kind");
}

Evaluator log_theta_evaluator(const ThetaExpr& theta) {
    switch (theta.kind()) {
        case ThetaExpr::Kind::Rational:
        case ThetaExpr::Kind::DecimalLiteral: {
            mpq_class v = theta.rational_value();
            Evaluator ev;
            if (v == 1) ev.exact = mpq_class(0);
            ev.enclose = [v](long bits) { return log_enclosure(v, bits); };
            return ev;
        }
        case ThetaExpr::Kind::ExpRational: {
            mpq_class x(theta.exp_num(), theta.exp_den());
            x.canonicalize();
            Evaluator ev;
            ev.exact = x;
            ev.enclose = [x](long bits) { return RealInterval::point(x, bits); };
            return ev;
        }
        case ThetaExpr::Kind::Pi: {
            Evaluator ev;
            ev.enclose = [](long bits) { return log_enclosure(pi_enclosure(bits + 4), bits); };
            return ev;
        }
    }
    throw Error("unreachable theta kind");
}

RealInterval nth_root_interval(const ThetaExpr& theta, long n, long bits) {
    if (bits < 1) throw Error("precision_bits must be positive");
    if (bits > precision_cap()) throw PrecisionCapExceeded(bits);
    Evaluator ev = theta_root_evaluator(theta, n);
    if (ev.exact) return RealInterval::point(*ev.exact, bits);

    // Snap to the dyadic grid 2^-(bits+1): enclosures at growing precision
    // are then nested, because the grids are and the value is never on one.
    long S = bits + 1;
    for (long wb = bits + 8; wb <= precision_cap(); wb *= 2) {
        RealInterval raw = ev.enclose(wb);
        mpz_class flo = floor_q(mul_pow2(raw.lo, S));
        mpz_class fhi = floor_q(mul_pow2(raw.hi, S));
        if (flo == fhi) {
            mpq_class lo = mul_pow2(mpq_class(flo), -S);
            return RealInterval(lo, lo + pow2_inv(S), bits);
        }
    }
    throw PrecisionCapExceeded(precision_cap());
}

std::optional<mpz_class> certified_floor(const Evaluator& ev, long start_bits) {
    if (ev.exact) return floor_q(*ev.exact);
    for (long b = start_bits; b <= precision_cap(); b *= 2) {
        RealInterval I = ev.enclose(b);
        mpz_class flo = floor_q(I.lo), fhi = floor_q(I.hi);
        if (flo == fhi) return flo;
    }
    return std::nullopt;
}

std::optional<int> certified_cmp(const Evaluator& ev, const mpq_class& q, long start_bits) {
    if (ev.exact) {
        int c = cmp(*ev.exact, q);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    for (long b = start_bits; b <= precision_cap(); b *= 2) {
        RealInterval I = ev.enclose(b);
        if (I.hi < q) return -1;
        if (I.lo > q) return 1;
    }
    return std::nullopt;
}

FloorResult floor_reciprocal_frac(const Evaluator& ev, long start_bits) {
    if (ev.exact) {
        mpq_class fr = frac_q(*ev.exact);
        if (fr == 0) return FloorInfinite{};
        return FloorExact{floor_q(1 / fr)};
    }
    mpq_class last_width;
    for (long b = start_bits; b <= precision_cap(); b *= 2) {
        RealInterval I = ev.enclose(b);
        last_width = I.width();
        mpz_class F = floor_q(I.lo);
        if (floor_q(I.hi) != F) continue;   // integer part not yet pinned
        mpq_class flo = I.lo - F, fhi = I.hi - F;
        if (flo == 0) continue;             // fractional part not separated from 0
        mpq_class rlo = 1 / fhi, rhi = 1 / flo;
        last_width = rhi - rlo;
        if (floor_q(rlo) == floor_q(rhi)) return FloorExact{floor_q(rlo)};
    }
    return FloorUndecided{last_width};
}

FloorResult floor_reciprocal_nearest(const Evaluator& ev, long start_bits) {
    if (ev.exact) {
        mpq_class fr = frac_q(*ev.exact);
        mpq_class d = std::min(fr, mpq_class(1 - fr));
        if (d == 0) return FloorInfinite{};
        return FloorExact{floor_q(1 / d)};
    }
    mpq_class last_width;
    for (long b = start_bits; b <= precision_cap(); b *= 2) {
        RealInterval I = ev.enclose(b);
        last_width = I.width();
        mpz_class F = floor_q(I.lo);
        if (floor_q(I.hi) != F) continue;
        mpq_class half = mpq_class(F) + mpq_class(1, 2);
        mpq_class dlo, dhi;
        if (I.hi < half) {
            dlo = I.lo - F;
            dhi = I.hi - F;
        } else if (I.lo > half) {
            dlo = F + 1 - I.hi;
            dhi = F + 1 - I.lo;
        } else {
            continue;  // could straddle the midpoint
        }
        if (dlo <= 0) continue;
        mpq_class rlo = 1 / dhi, rhi = 1 / dlo;
        last_width = rhi - rlo;
        if (floor_q(rlo) == floor_q(rhi)) return FloorExact{floor_q(rlo)};
    }
    return FloorUndecided{last_width};
}

FloorResult certified_floor_reciprocal_frac(const ThetaExpr& theta, long n) {
    theta.require_valid_base();
    Evaluator ev = theta_root_evaluator(theta, n);
    return floor_reciprocal_frac(ev, default_start_bits(theta, n));
}

}  // namespace rootfrac
