// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "oracle.hpp"
#include "rootfrac/kernel.hpp"

using namespace rootfrac;

namespace {

// Relative-width contract: hi - lo <= 2^-bits * max(1, hi).
void check_width(const RealInterval& iv, long bits) {
    mpq_class budget = pow2_inv(bits) * std::max(mpq_class(1), iv.hi);
    CHECK(iv.width() <= budget);
}

}  // namespace

TEST_CASE("integer nth roots") {
    CHECK(iroot_floor(0, 3) == 0);
    CHECK(iroot_floor(1, 7) == 1);
    CHECK(iroot_floor(26, 3) == 2);
    CHECK(iroot_floor(27, 3) == 3);
    CHECK(iroot_floor(28, 3) == 3);
    CHECK(iroot_floor(mpz_class("1000000000000000000000000"), 2) ==
          mpz_class("1000000000000"));
    mpz_class big = 1;
    for (int i = 0; i < 97; ++i) big *= 10;  // 10^97
    CHECK(iroot_floor(big - 1, 97) == 9);
    CHECK(iroot_floor(big, 97) == 10);
}

TEST_CASE("exact rational roots") {
    CHECK(exact_rational_root(mpq_class(4), 2) == mpq_class(2));
    CHECK(exact_rational_root(mpq_class(8, 27), 3) == mpq_class(2, 3));
    CHECK_FALSE(exact_rational_root(mpq_class(2), 2).has_value());
    CHECK_FALSE(exact_rational_root(mpq_class(17), 5).has_value());
    CHECK(exact_rational_root(mpq_class(1), 9) == mpq_class(1));
}

TEST_CASE("pi enclosure against the independent evaluator") {
    for (long bits : {24L, 64L, 256L, 2048L}) {
        RealInterval iv = pi_enclosure(bits);
        check_width(iv, bits);
        CHECK(oracle::side_of_interval(iv, ThetaExpr::pi(), 1) == 0);
    }
}

TEST_CASE("exp enclosure: small, fractional and huge arguments") {
    RealInterval one = exp_enclosure(mpq_class(0), 64);
    CHECK(one.lo == 1);
    CHECK(one.hi == 1);

    for (long bits : {32L, 128L, 512L}) {
        // e^{1/2} = theta^{1/1} with theta = e^{1/2}
        RealInterval iv = exp_enclosure(mpq_class(1, 2), bits);
        check_width(iv, bits);
        CHECK(oracle::side_of_interval(iv, ThetaExpr::exp_rational(1, 2), 1) == 0);
    }

    // relative precision must survive a large exponent cheaply
    RealInterval big = exp_enclosure(mpq_class(1000), 64);
    CHECK(big.lo > 0);
    CHECK(big.width() <= pow2_inv(64) * big.hi);
}

TEST_CASE("log enclosure brackets and scales") {
    CHECK(log_enclosure(mpq_class(1), 64).is_point());
    RealInterval l2 = log_enclosure(mpq_class(2), 128);
    check_width(l2, 128);
    // 0.693147180559945309417 < log 2 < ...310
    CHECK(l2.lo > mpq_class(693147, 1000000));
    CHECK(l2.hi < mpq_class(693148, 1000000));

    RealInterval tiny = log_enclosure(mpq_class(1, 1000000), 96);
    CHECK(tiny.hi < 0);
    RealInterval inv = log_enclosure(mpq_class(1000000), 96);
    // log(1/x) = -log x
    CHECK(tiny.lo <= -inv.lo);
    CHECK(-inv.hi <= tiny.hi);
}

TEST_CASE("root enclosure, Newton and exp/log routes") {
    // exact fast path
    CHECK(root_enclosure(mpq_class(4), 2, 64).is_point());

    for (long n : {2L, 17L, 64L, 65L, 500L, 10000L}) {
        ThetaExpr t = ThetaExpr::rational(17);
        RealInterval iv = root_enclosure(mpq_class(17), static_cast<unsigned long>(n), 80);
        check_width(iv, 80);
        CHECK(oracle::side_of_interval(iv, t, n) == 0);
    }

    // the two routes agree across the n = 64 seam
    RealInterval a = root_enclosure(mpq_class(3, 2), 64, 100);
    RealInterval b = root_enclosure(mpq_class(3, 2), 65, 100);
    CHECK(a.lo > b.lo);  // (3/2)^{1/64} > (3/2)^{1/65}
}

TEST_CASE("interval helpers round outward") {
    mpq_class v(10, 3);
    CHECK(round_down_sig(v, 20) <= v);
    CHECK(round_up_sig(v, 20) >= v);
    CHECK(round_up_sig(v, 20) - round_down_sig(v, 20) <= pow2_inv(16));

    RealInterval x(mpq_class(1, 3), mpq_class(1, 2), 10);
    RealInterval y(mpq_class(-2), mpq_class(3), 10);
    RealInterval p = imul(x, y);
    CHECK(p.lo <= mpq_class(1, 3) * -2);
    CHECK(p.hi >= mpq_class(1, 2) * 3);
    RealInterval q = ipow_ui(x, 3);
    CHECK(q.lo == mpq_class(1, 27));
    CHECK(q.hi == mpq_class(1, 8));
}
