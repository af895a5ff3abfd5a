// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cassert>
#include <string>

namespace rootfrac {

/// Closed interval [lo, hi] certified to enclose one real value.
/// Endpoints are exact rationals (dyadic for every computed path);
/// precision_bits records the relative width that was requested.
struct RealInterval {
    mpq_class lo;
    mpq_class hi;
    long precision_bits = 0;

    RealInterval() = default;
    RealInterval(mpq_class l, mpq_class h, long bits)
        : lo(std::move(l)), hi(std::move(h)), precision_bits(bits) {
        assert(lo <= hi);
    }

    static RealInterval point(const mpq_class& v, long bits) {
        return RealInterval(v, v, bits);
    }

    mpq_class width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
    bool contains(const RealInterval& other) const {
        return lo <= other.lo && other.hi <= hi;
    }

    /// Both endpoints strictly on one side of a rational.
    bool strictly_below(const mpq_class& v) const { return hi < v; }
    bool strictly_above(const mpq_class& v) const { return lo > v; }

    RealInterval operator+(const mpq_class& r) const {
        return RealInterval(lo + r, hi + r, precision_bits);
    }
    RealInterval operator-(const mpq_class& r) const {
        return RealInterval(lo - r, hi - r, precision_bits);
    }
    RealInterval operator+(const RealInterval& o) const {
        return RealInterval(lo + o.lo, hi + o.hi, std::min(precision_bits, o.precision_bits));
    }
    RealInterval operator-(const RealInterval& o) const {
        return RealInterval(lo - o.hi, hi - o.lo, std::min(precision_bits, o.precision_bits));
    }

    /// Scale by an exact rational (sign-aware).
    RealInterval scaled(const mpq_class& c) const {
        if (c >= 0) return RealInterval(lo * c, hi * c, precision_bits);
        return RealInterval(hi * c, lo * c, precision_bits);
    }

    /// Reciprocal; requires the interval to exclude zero.
    RealInterval reciprocal() const {
        assert(lo > 0 || hi < 0);
        return RealInterval(1 / hi, 1 / lo, precision_bits);
    }

    /// Decimal rendering of both endpoints, for debugging.
    std::string debug_string() const;
};

/// floor of an exact rational.
inline mpz_class floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// ceil of an exact rational.
inline mpz_class ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

/// fractional part {q} in [0,1).
inline mpq_class frac_q(const mpq_class& q) { return q - mpq_class(floor_q(q)); }

/// 2^-bits as an exact rational.
inline mpq_class pow2_inv(long bits) {
    mpq_class r(1);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
    return r;
}

/// v * 2^bits (bits may be negative).
inline mpq_class mul_pow2(const mpq_class& v, long bits) {
    mpq_class r;
    if (bits >= 0)
        mpq_mul_2exp(r.get_mpq_t(), v.get_mpq_t(), static_cast<unsigned long>(bits));
    else
        mpq_div_2exp(r.get_mpq_t(), v.get_mpq_t(), static_cast<unsigned long>(-bits));
    return r;
}

/// Largest multiple of 2^-bits that is <= v.
inline mpq_class dyadic_floor(const mpq_class& v, long bits) {
    return mul_pow2(mpq_class(floor_q(mul_pow2(v, bits))), -bits);
}
/// Smallest multiple of 2^-bits that is >= v.
inline mpq_class dyadic_ceil(const mpq_class& v, long bits) {
    return mul_pow2(mpq_class(ceil_q(mul_pow2(v, bits))), -bits);
}

/// Round toward -inf / +inf keeping `sig` significant bits (dyadic result).
mpq_class round_down_sig(const mpq_class& v, long sig);
mpq_class round_up_sig(const mpq_class& v, long sig);

RealInterval imul(const RealInterval& a, const RealInterval& b);
/// b must not contain zero.
RealInterval idiv(const RealInterval& a, const RealInterval& b);
/// Requires a.lo >= 0.
RealInterval ipow_ui(const RealInterval& a, unsigned long e);
RealInterval intersect(const RealInterval& a, const RealInterval& b);

}  // namespace rootfrac
