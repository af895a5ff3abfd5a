// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/mfun.hpp"

#include "rootfrac/errors.hpp"
#include "rootfrac/kernel.hpp"

namespace rootfrac {

namespace {

MValue to_mvalue(const FloorResult& r) {
    if (is_infinite(r)) return MValue::infinite();
    if (is_exact(r)) return MValue{exact_value(r)};
    throw PrecisionCapExceeded(precision_cap());
}

// Enclosure callback for g(x) * log(theta) = log(theta) / log(1 + 1/x).
EncloseFn inverse_endpoint_fn(const ThetaExpr& theta, long x) {
    Evaluator lg = log_theta_evaluator(theta);
    mpq_class ratio = 1 + mpq_class(1, x);  // (x+1)/x
    return [lg, ratio](long bits) {
        RealInterval num = lg.enclose(bits + 8);
        RealInterval den = log_enclosure(ratio, bits + 8);
        RealInterval r = idiv(num, den);
        r.precision_bits = bits;
        return r;
    };
}

// For rational theta the endpoint g(x) log theta is an integer m exactly
// when theta = ((x+1)/x)^m; everywhere else it is irrational.
bool endpoint_hits_integer(const ThetaExpr& theta, long x, const mpz_class& m) {
    if (!theta.is_rational_valued()) return false;
    if (m <= 0 || !m.fits_ulong_p()) return false;
    mpq_class base = 1 + mpq_class(1, x);
    mpq_class p;
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), m.get_ui());
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), m.get_ui());
    return p == theta.rational_value();
}

// Smallest integer >= V (left) or largest integer < V (right), where
// V = g(x) log theta.
long inverse_endpoint(const ThetaExpr& theta, long x, bool left) {
    EncloseFn fn = inverse_endpoint_fn(theta, x);
    for (long b = 64; b <= precision_cap(); b *= 2) {
        RealInterval I = fn(b);
        mpz_class flo = floor_q(I.lo), fhi = floor_q(I.hi);
        if (flo != fhi) {
            // an integer candidate sits inside; decidable only via exactness
            if (fhi == flo + 1 && endpoint_hits_integer(theta, x, fhi)) {
                long m = static_cast<long>(fhi.get_si());
                return left ? m : m - 1;
            }
            continue;
        }
        if (I.lo == flo) {
            if (endpoint_hits_integer(theta, x, flo)) {
                long m = static_cast<long>(flo.get_si());
                return left ? m : m - 1;
            }
            continue;
        }
        return static_cast<long>(flo.get_si()) + (left ? 1 : 0);
    }
    throw PrecisionCapExceeded(precision_cap());
}

}  // namespace

MValue m_theta(const ThetaExpr& theta, long n) {
    return to_mvalue(certified_floor_reciprocal_frac(theta, n));
}

long n0(const ThetaExpr& theta) {
    if (!theta.greater_than_one()) throw Error("N0(theta) requires theta > 1");
    if (theta.is_rational_valued()) {
        const mpq_class& v = theta.rational_value();
        long n = 1;
        while (mul_pow2(mpq_class(1), n) <= v) ++n;
        return n;
    }
    // log2(theta) is never an integer for e^{k/l} or pi.
    Evaluator lg = log_theta_evaluator(theta);
    for (long b = 64; b <= precision_cap(); b *= 2) {
        RealInterval num = lg.enclose(b);
        RealInterval den = log_enclosure(mpq_class(2), b);
        RealInterval r = idiv(num, den);
        mpz_class flo = floor_q(r.lo), fhi = floor_q(r.hi);
        if (flo == fhi) return std::max(1L, static_cast<long>(flo.get_si()) + 1);
    }
    throw PrecisionCapExceeded(precision_cap());
}

MSequence m_sequence(const ThetaExpr& theta, long from, long to) {
    if (from > to) throw Error("m_sequence requires from <= to");
    MSequence seq{theta, from, {}, 0};
    seq.n0_marker = theta.greater_than_one() ? n0(theta) : 0;
    seq.values.reserve(static_cast<size_t>(to - from + 1));
    for (long n = from; n <= to; ++n) seq.values.push_back(m_theta(theta, n));
    return seq;
}

MValue m_prime_theta(const ThetaExpr& theta, long n) {
    theta.require_valid_base();
    Evaluator ev = theta_root_evaluator(theta, n);
    return to_mvalue(floor_reciprocal_nearest(ev, default_start_bits(theta, n)));
}

IntegerRange inverse_range(const ThetaExpr& theta, long x) {
    if (!theta.greater_than_one()) throw Error("inverse_range requires theta > 1");
    if (x < 1) throw Error("inverse_range requires x >= 1");
    long lo = inverse_endpoint(theta, x, /*left=*/true);
    long hi = inverse_endpoint(theta, x + 1, /*left=*/false);
    lo = std::max(lo, n0(theta));
    IntegerRange r;
    r.lo = lo;
    r.hi = hi;
    return r;
}

SequenceEvaluator nth_root_of_n_sequence() {
    return [](long n) {
        return theta_root_evaluator(ThetaExpr::rational(n), n);
    };
}

SequenceEvaluator theta_root_sequence(const ThetaExpr& theta) {
    return [theta](long n) { return theta_root_evaluator(theta, n); };
}

MValue m_custom(const SequenceEvaluator& seq, long n) {
    if (n < 1) throw Error("n must be >= 1");
    Evaluator ev = seq(n);
    long start = 64;
    for (long m = n; m > 1; m = (m + 1) / 2) ++start;
    return to_mvalue(floor_reciprocal_frac(ev, start));
}

std::optional<long> smallest_n_with_value(const SequenceEvaluator& seq, long x,
                                          long search_cap) {
    if (x < 2) throw Error("smallest_n_with_value requires x >= 2");
    for (long n = 1; n <= search_cap; ++n) {
        MValue v = m_custom(seq, n);
        if (!v.is_infinite() && v.value() == x) return n;
    }
    return std::nullopt;
}

}  // namespace rootfrac
