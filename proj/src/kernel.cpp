// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/kernel.hpp"

#include <cassert>

namespace rootfrac {

namespace {

mpq_class from_scaled(const mpz_class& m, long scale_bits) {
    return mul_pow2(mpq_class(m), -scale_bits);
}

// Enclosure of atanh(a/b) * 2^P for 0 <= a/b <= 1/3, as [sum, sum + slack].
// Power-of-y terms computed with floor divisions; each step loses at most a
// couple of ulps, summed into the slack.
void atanh_fixed(const mpz_class& a, const mpz_class& b, long P, mpz_class& lo,
                 mpz_class& hi) {
    assert(a >= 0 && b > 0 && 3 * a <= b);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(P));
    mpz_class a2 = a * a, b2 = b * b;
    mpz_class pw = scale * a / b;  // y^{2j+1} * 2^P, floor
    mpz_class sum = pw;            // j = 0 term
    long j = 0;
    while (pw > 0) {
        ++j;
        pw = pw * a2 / b2;
        sum += pw / (2 * j + 1);
    }
    // Underestimates only: <=3 ulp per term plus a tail below 2 ulp once
    // pw reaches zero (ratio y^2 <= 1/9).
    lo = sum;
    hi = sum + 3 * j + 8;
}

// Enclosure of arctan(1/c) * 2^P as [lo, hi]; alternating series.
void atan_inv_fixed(unsigned long c, long P, mpz_class& lo, mpz_class& hi) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(P));
    mpz_class c2(static_cast<unsigned long>(c));
    c2 *= c2;
    mpz_class pw = scale / c;  // (1/c)^{2j+1} * 2^P, floor
    mpz_class sum = pw;
    long j = 0;
    int sign = -1;
    while (pw > 0) {
        ++j;
        pw /= c2;
        mpz_class term = pw / (2 * j + 1);
        if (sign > 0)
            sum += term;
        else
            sum -= term;
        sign = -sign;
    }
    mpz_class slack = 3 * j + 8;
    lo = sum - slack;
    hi = sum + slack;
}

// Series enclosure of e^x * 2^P for rational x in [0, 1/2], as [sum, sum+slack].
void exp_series_fixed(const mpq_class& x, long P, mpz_class& lo, mpz_class& hi) {
    assert(x >= 0 && 2 * x <= 1);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(P));
    const mpz_class& a = x.get_num();
    const mpz_class& b = x.get_den();
    mpz_class term = scale, sum = scale;
    long j = 0;
    while (term > 0) {
        ++j;
        term = term * a / (b * j);
        sum += term;
    }
    lo = sum;
    hi = sum + 2 * j + 8;  // per-term floor loss (ratio <= 1/2) plus tail
}

}  // namespace

mpz_class iroot_floor(const mpz_class& a, unsigned long n) {
    assert(a >= 0 && n >= 1);
    if (a == 0) return 0;
    if (n == 1) return a;
    unsigned long bits = mpz_sizeinbase(a.get_mpz_t(), 2);
    if (bits <= n) {  // root is 1 (a >= 1, a < 2^n except a == 2^n handled below)
        mpz_class two_n;
        mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
        return a >= two_n ? 2 : 1;
    }
    mpz_class x;
    mpz_ui_pow_ui(x.get_mpz_t(), 2, (bits + n - 1) / n);  // x >= true root
    while (true) {
        mpz_class xp;
        mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), n - 1);
        mpz_class y = (mpz_class((n - 1) * x) + a / xp) / n;
        if (y >= x) break;
        x = y;
    }
    mpz_class xn;
    mpz_pow_ui(xn.get_mpz_t(), x.get_mpz_t(), n);
    while (xn > a) {
        x -= 1;
        mpz_pow_ui(xn.get_mpz_t(), x.get_mpz_t(), n);
    }
    return x;
}

std::optional<mpq_class> exact_rational_root(const mpz_class& p, const mpz_class& q,
                                             unsigned long n) {
    assert(p > 0 && q > 0);
    mpz_class rp = iroot_floor(p, n), rq = iroot_floor(q, n);
    mpz_class chk;
    mpz_pow_ui(chk.get_mpz_t(), rp.get_mpz_t(), n);
    if (chk != p) return std::nullopt;
    mpz_pow_ui(chk.get_mpz_t(), rq.get_mpz_t(), n);
    if (chk != q) return std::nullopt;
    return mpq_class(rp, rq);
}

std::optional<mpq_class> exact_rational_root(const mpq_class& v, unsigned long n) {
    return exact_rational_root(v.get_num(), v.get_den(), n);
}

RealInterval pi_enclosure(long bits) {
    long P = bits + 48;
    mpz_class alo, ahi, blo, bhi;
    atan_inv_fixed(5, P, alo, ahi);
    atan_inv_fixed(239, P, blo, bhi);
    // pi = 16 arctan(1/5) - 4 arctan(1/239)
    mpz_class lo = 16 * alo - 4 * bhi;
    mpz_class hi = 16 * ahi - 4 * blo;
    return RealInterval(from_scaled(lo, P), from_scaled(hi, P), bits);
}

RealInterval exp_enclosure(const mpq_class& x, long bits) {
    assert(x >= 0);
    if (x == 0) return RealInterval::point(1, bits);
    mpq_class t = x;
    long s = 0;
    while (2 * t > 1) {
        t /= 2;
        ++s;
    }
    long P = bits + 2 * s + 64;
    mpz_class slo, shi;
    exp_series_fixed(t, P, slo, shi);
    mpq_class lo = from_scaled(slo, P), hi = from_scaled(shi, P);
    for (long i = 0; i < s; ++i) {
        lo = round_down_sig(lo * lo, P);
        hi = round_up_sig(hi * hi, P);
    }
    return RealInterval(lo, hi, bits);
}

RealInterval log_enclosure(const mpq_class& x, long bits) {
    assert(x > 0);
    if (x == 1) return RealInterval::point(0, bits);
    // reduce to t in [3/4, 3/2) with x = t * 2^m
    long m = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
    mpq_class t = mul_pow2(x, -m);
    while (2 * t >= 3) {
        t /= 2;
        ++m;
    }
    while (4 * t < 3) {
        t *= 2;
        --m;
    }
    long mabs = m < 0 ? -m : m;
    long guard = 24;
    while ((1L << guard) <= mabs + 2) ++guard;  // absorb the m * log2 term
    long P = bits + guard + 32;

    // log t = 2 atanh(y), y = (t-1)/(t+1) in [-1/7, 1/5]
    mpq_class y = (t - 1) / (t + 1);
    bool neg = y < 0;
    mpq_class ya = abs(y);
    mpz_class tlo, thi;
    atanh_fixed(ya.get_num(), ya.get_den(), P, tlo, thi);
    mpz_class log_t_lo = 2 * (neg ? -thi : tlo);
    mpz_class log_t_hi = 2 * (neg ? -tlo : thi);

    mpz_class l2lo, l2hi;  // log 2 = 2 atanh(1/3)
    atanh_fixed(1, 3, P, l2lo, l2hi);
    l2lo *= 2;
    l2hi *= 2;

    mpz_class lo = log_t_lo + (m >= 0 ? m * l2lo : m * l2hi);
    mpz_class hi = log_t_hi + (m >= 0 ? m * l2hi : m * l2lo);
    return RealInterval(from_scaled(lo, P), from_scaled(hi, P), bits);
}

RealInterval log_enclosure(const RealInterval& x, long bits) {
    assert(x.lo > 0);
    RealInterval a = log_enclosure(x.lo, bits + 1);
    if (x.is_point()) return RealInterval(a.lo, a.hi, bits);
    RealInterval b = log_enclosure(x.hi, bits + 1);
    return RealInterval(a.lo, b.hi, bits);
}

RealInterval root_enclosure(const mpq_class& x, unsigned long n, long bits) {
    assert(x > 0);
    if (auto r = exact_rational_root(x, n)) return RealInterval::point(*r, bits);
    if (n > 64) {
        // Newton on an n*S-bit shifted integer gets expensive for large n;
        // x^{1/n} = e^{(log x)/n} stays cheap because the exponent shrinks.
        RealInterval lg = log_enclosure(x, bits + 8);
        mpq_class qn(static_cast<unsigned long>(n));
        auto exp_lo = [bits](const mpq_class& z) {
            return z >= 0 ? exp_enclosure(z, bits + 4).lo
                          : mpq_class(1) / exp_enclosure(-z, bits + 4).hi;
        };
        auto exp_hi = [bits](const mpq_class& z) {
            return z >= 0 ? exp_enclosure(z, bits + 4).hi
                          : mpq_class(1) / exp_enclosure(-z, bits + 4).lo;
        };
        return RealInterval(exp_lo(lg.lo / qn), exp_hi(lg.hi / qn), bits);
    }
    long S = bits + 2;
    mpz_class N = floor_q(mul_pow2(x, static_cast<long>(n) * S));
    mpz_class r = iroot_floor(N, n);
    return RealInterval(from_scaled(r, S), from_scaled(r + 1, S), bits);
}

RealInterval root_enclosure(const RealInterval& x, unsigned long n, long bits) {
    RealInterval a = root_enclosure(x.lo, n, bits + 1);
    if (x.is_point()) return RealInterval(a.lo, a.hi, bits);
    RealInterval b = root_enclosure(x.hi, n, bits + 1);
    return RealInterval(a.lo, b.hi, bits);
}

}  // namespace rootfrac
