// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/interval.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace rootfrac {

namespace {

// floor(log2 |v|) for v != 0, exact.
long ilog2_abs(const mpq_class& v) {
    assert(v != 0);
    long nb = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 2));
    long e = nb - db;
    // sizeinbase gives ceil(log2)+-1; settle by comparison with 2^e.
    mpq_class a = abs(v);
    while (mul_pow2(mpq_class(1), e) > a) --e;
    while (mul_pow2(mpq_class(1), e + 1) <= a) ++e;
    return e;
}

}  // namespace

mpq_class round_down_sig(const mpq_class& v, long sig) {
    if (v == 0) return v;
    long e = ilog2_abs(v);
    return dyadic_floor(v, sig - 1 - e);
}

mpq_class round_up_sig(const mpq_class& v, long sig) {
    if (v == 0) return v;
    long e = ilog2_abs(v);
    return dyadic_ceil(v, sig - 1 - e);
}

RealInterval imul(const RealInterval& a, const RealInterval& b) {
    mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    mpq_class lo = std::min(std::min(p1, p2), std::min(p3, p4));
    mpq_class hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return RealInterval(lo, hi, std::min(a.precision_bits, b.precision_bits));
}

RealInterval idiv(const RealInterval& a, const RealInterval& b) {
    assert(b.lo > 0 || b.hi < 0);
    return imul(a, b.reciprocal());
}

RealInterval ipow_ui(const RealInterval& a, unsigned long e) {
    assert(a.lo >= 0);
    mpq_class lo, hi;
    mpz_pow_ui(lo.get_num_mpz_t(), a.lo.get_num_mpz_t(), e);
    mpz_pow_ui(lo.get_den_mpz_t(), a.lo.get_den_mpz_t(), e);
    mpz_pow_ui(hi.get_num_mpz_t(), a.hi.get_num_mpz_t(), e);
    mpz_pow_ui(hi.get_den_mpz_t(), a.hi.get_den_mpz_t(), e);
    lo.canonicalize();
    hi.canonicalize();
    return RealInterval(lo, hi, a.precision_bits);
}

RealInterval intersect(const RealInterval& a, const RealInterval& b) {
    mpq_class lo = std::max(a.lo, b.lo);
    mpq_class hi = std::min(a.hi, b.hi);
    assert(lo <= hi);
    return RealInterval(lo, hi, std::max(a.precision_bits, b.precision_bits));
}

std::string RealInterval::debug_string() const {
    std::ostringstream os;
    os << "[" << lo.get_d() << ", " << hi.get_d() << "]@" << precision_bits << "b";
    return os.str();
}

}  // namespace rootfrac
