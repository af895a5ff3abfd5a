// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "rootfrac/bounds.hpp"
#include "rootfrac/checks.hpp"

using namespace rootfrac;

TEST_CASE("g enclosures") {
    RealInterval g1 = g_interval(1, 64);
    // 1/log 2 = 1.442695...
    CHECK(g1.lo > mpq_class(14426, 10000));
    CHECK(g1.hi < mpq_class(14427, 10000));
    RealInterval g2 = g_interval(2, 64);
    CHECK(g2.lo > mpq_class(24663, 10000));
    CHECK(g2.hi < mpq_class(24664, 10000));
    RealInterval gm = g_interval(1000000, 64);
    CHECK(gm.lo >= mpq_class(1000000) + mpq_class(1, 2) - mpq_class(1, 1000000));
    CHECK(gm.hi < mpq_class(1000000) + mpq_class(1, 2));
}

TEST_CASE("g bound reports") {
    CHECK(check_g_bounds(1).holds());
    CHECK(check_g_bounds(mpq_class(7, 2)).holds());
    CHECK(check_g_bounds(1000000).holds());

    CHECK(check_g_difference(3, 3).holds());
    CHECK(check_g_difference(1, 10).holds());
    CHECK(check_g_difference(mpq_class(5, 4), mpq_class(17, 3)).holds());
    CHECK_THROWS_AS(check_g_difference(10, 1), Error);
}

TEST_CASE("exponential comparison reports") {
    auto [less1, more1] = check_exp_inequalities(1, 2);
    CHECK(less1.holds());
    CHECK(more1.holds());
    auto [less2, more2] = check_exp_inequalities(mpq_class(1, 2), 3);
    CHECK(less2.holds());
    CHECK(more2.holds());
    auto [less3, more3] = check_exp_inequalities(2, 5);
    CHECK(less3.holds());
    CHECK(more3.verdict == Verdict::NotApplicable);
    auto [less4, more4] = check_exp_inequalities(1, 1);
    CHECK(less4.holds());
    CHECK(more4.verdict == Verdict::NotApplicable);
}

TEST_CASE("main inequality and gap bound") {
    CHECK(check_main_ineq(ThetaExpr::pi(), 10).holds());
    CHECK(check_main_ineq(ThetaExpr::e(), 5).holds());
    CHECK(check_main_ineq(ThetaExpr::rational(2), 2).holds());

    CHECK(check_gap_bound(ThetaExpr::rational(2), 2, 90).holds());
    for (long n = 2; n <= 89; ++n)
        CHECK(check_gap_bound(ThetaExpr::rational(2), n, n + 1).holds());
    CHECK(check_gap_bound(ThetaExpr::e(), 2, 3).holds());
}

TEST_CASE("strict increase dichotomy") {
    CHECK(check_strict_increase(ThetaExpr::rational(2), 2, 90).strictly_increasing);
    auto r17 = check_strict_increase(ThetaExpr::rational(17), 5, 90);
    CHECK_FALSE(r17.strictly_increasing);
    CHECK(r17.repeat_at == 5);
    auto rpi = check_strict_increase(ThetaExpr::pi(), 2, 90);
    CHECK_FALSE(rpi.strictly_increasing);
    CHECK(rpi.repeat_at == 4);
}

TEST_CASE("bernoulli numbers") {
    auto B = bernoulli_numbers(9);
    CHECK(B[0] == 1);
    CHECK(B[1] == mpq_class(-1, 2));
    CHECK(B[2] == mpq_class(1, 6));
    CHECK(B[3] == 0);
    CHECK(B[4] == mpq_class(-1, 30));
    CHECK(B[5] == 0);
    CHECK(B[6] == mpq_class(1, 42));
    CHECK(B[8] == mpq_class(-1, 30));
}

TEST_CASE("bernoulli series against the generating identity") {
    // sum B_j/j! x^j times sum x^i/(i+1)! equals 1 up to the truncation order
    const long order = 12;
    auto B = bernoulli_numbers(order + 1);
    std::vector<mpq_class> a(order + 1), b(order + 1), prod(order + 1, 0);
    mpz_class fact = 1;
    for (long j = 0; j <= order; ++j) {
        if (j > 0) fact *= j;
        a[j] = B[j] / mpq_class(fact);             // x/(e^x-1) coefficients
        mpz_class fact2 = fact * (j + 1);
        b[j] = mpq_class(1) / mpq_class(fact2);    // (e^x-1)/x coefficients
    }
    for (long i = 0; i <= order; ++i)
        for (long j = 0; i + j <= order; ++j) prod[i + j] += a[i] * b[j];
    CHECK(prod[0] == 1);
    for (long d = 1; d <= order; ++d) CHECK(prod[d] == 0);
}

TEST_CASE("bernoulli approximation of 1/(theta^{1/n}-1)") {
    // terms=0 band around n/log(e) - 1/2 = n - 1/2
    RealInterval iv = bernoulli_approx(ThetaExpr::e(), 10, 0);
    CHECK(iv.contains(mpq_class(95083, 10000)));  // true value ~ 9.5083
    // floor of the series value equals n-1 on [2, 100]
    for (long n = 2; n <= 100; ++n) {
        RealInterval band = bernoulli_approx(ThetaExpr::e(), n, 1);
        mpq_class mid = (band.lo + band.hi) / 2;
        CHECK(floor_q(mid) == n - 1);
    }
    CHECK_THROWS_AS(bernoulli_approx(ThetaExpr::exp_rational(13, 1), 1, 0),
                    ConvergenceDomain);

    // the 3-term series center approaches the certified value as n grows
    for (const ThetaExpr& t : sweep_theta_set()) {
        mpq_class prev_err = -1;
        for (long n : {10L, 100L, 1000L}) {
            RealInterval approx = bernoulli_approx(t, n, 3);
            mpq_class center = (approx.lo + approx.hi) / 2;
            Evaluator root = theta_root_evaluator(t, n);
            RealInterval r = root.enclose(256);
            // certified 1/(theta^{1/n}-1)
            RealInterval recip = (r - mpq_class(1)).reciprocal();
            mpq_class err = abs(center - (recip.lo + recip.hi) / 2);
            if (prev_err >= 0) CHECK(err < prev_err);
            prev_err = err;
        }
    }
}

TEST_CASE("randomized sweep holds across all families") {
    SuiteResult r = run_inequality_sweep(7, 50);
    CHECK(r.failed == 0);
    CHECK(r.passed == 300);
}
