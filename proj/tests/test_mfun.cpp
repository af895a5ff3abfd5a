// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "oracle.hpp"
#include "rootfrac/mfun.hpp"

using namespace rootfrac;

TEST_CASE("spot values from the published tables") {
    CHECK(m_theta(ThetaExpr::pi(), 1) == MValue::of(7));
    CHECK(m_theta(ThetaExpr::e(), 5) == MValue::of(4));
    CHECK(m_theta(ThetaExpr::rational(2), 10) == MValue::of(13));
    CHECK(m_theta(ThetaExpr::rational(4), 2).is_infinite());
    CHECK(m_theta(ThetaExpr::rational(2), 1).is_infinite());
    CHECK(m_theta(ThetaExpr::rational(17), 4) == MValue::of(32));
    CHECK(m_theta(ThetaExpr::rational(mpq_class(3, 2)), 1) == MValue::of(2));
}

TEST_CASE("M for bases below one is eventually 1") {
    ThetaExpr half = ThetaExpr::rational(mpq_class(1, 2));
    for (long n = 2; n <= 10; ++n) CHECK(m_theta(half, n) == MValue::of(1));
}

TEST_CASE("N0 values") {
    CHECK(n0(ThetaExpr::rational(2)) == 2);
    CHECK(n0(ThetaExpr::rational(17)) == 5);
    CHECK(n0(ThetaExpr::rational(mpq_class(3, 2))) == 1);
    CHECK(n0(ThetaExpr::pi()) == 2);
    CHECK(n0(ThetaExpr::e()) == 2);
    CHECK(n0(ThetaExpr::exp_rational(2, 3)) == 1);
    CHECK(n0(ThetaExpr::exp_rational(4, 5)) == 2);
    CHECK(n0(ThetaExpr::exp_rational(5, 7)) == 2);
    CHECK(n0(ThetaExpr::rational(4)) == 3);  // log2(4) integral: N = 3
}

TEST_CASE("sequences carry the N0 marker") {
    MSequence s = m_sequence(ThetaExpr::rational(mpq_class(3, 2)), 1, 15);
    std::vector<long> expect = {2, 4, 6, 9, 11, 14, 16, 19, 21, 24, 26, 29, 31, 34, 36};
    REQUIRE(s.values.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i)
        CHECK(s.values[i] == MValue::of(expect[i]));
    CHECK(s.n0_marker == 1);

    MSequence e25 = m_sequence(ThetaExpr::exp_rational(2, 5), 1, 5);
    std::vector<long> expect2 = {2, 4, 7, 9, 12};
    for (size_t i = 0; i < expect2.size(); ++i)
        CHECK(e25.values[i] == MValue::of(expect2[i]));
}

TEST_CASE("nearest-integer variant") {
    CHECK(m_prime_theta(ThetaExpr::rational(2), 2) == MValue::of(2));
    CHECK(m_prime_theta(ThetaExpr::rational(mpq_class(1, 2)), 1) == MValue::of(2));
    CHECK(m_prime_theta(ThetaExpr::rational(mpq_class(9, 4)), 2) == MValue::of(2));
    CHECK(m_prime_theta(ThetaExpr::rational(4), 2).is_infinite());
    // M' matches the oracle on a mixed sample
    for (long n = 2; n <= 25; ++n) {
        auto expect = oracle::m_prime_value(ThetaExpr::rational(17), n);
        MValue got = m_prime_theta(ThetaExpr::rational(17), n);
        REQUIRE_FALSE(expect.infinite);
        CHECK(got.value() == expect.value);
    }
}

TEST_CASE("M' and M eventually coincide") {
    std::vector<ThetaExpr> thetas = {ThetaExpr::rational(2), ThetaExpr::pi(),
                                     ThetaExpr::exp_rational(5, 7)};
    for (const ThetaExpr& t : thetas)
        for (long n = 4; n <= 120; ++n)  // 4 > log theta / log(3/2) for all three
            CHECK(m_prime_theta(t, n) == m_theta(t, n));
}

TEST_CASE("inverse ranges match the tables") {
    IntegerRange r17 = inverse_range(ThetaExpr::rational(17), 2);
    CHECK(r17.lo == 7);
    CHECK(r17.hi == 9);
    IntegerRange re = inverse_range(ThetaExpr::e(), 5);
    CHECK(re.lo == 6);
    CHECK(re.hi == 6);
    CHECK(inverse_range(ThetaExpr::rational(2), 4).empty());
}

TEST_CASE("inverse_range consistency with direct evaluation") {
    std::vector<ThetaExpr> thetas = {ThetaExpr::rational(2), ThetaExpr::rational(17),
                                     ThetaExpr::pi(), ThetaExpr::exp_rational(3, 7)};
    for (const ThetaExpr& t : thetas) {
        long start = n0(t);
        std::vector<long> window_m;
        for (long n = start; n <= start + 120; ++n) {
            MValue v = m_theta(t, n);
            window_m.push_back(v.is_infinite() ? -1 : static_cast<long>(v.value().get_si()));
        }
        for (long x = 1; x <= 50; ++x) {
            IntegerRange r = inverse_range(t, x);
            for (long n = start; n <= start + 120; ++n) {
                bool in_range = r.contains(n);
                bool is_value = window_m[static_cast<size_t>(n - start)] == x;
                CHECK(in_range == is_value);
            }
        }
    }
}

TEST_CASE("monotonicity, lower bound and sandwich properties") {
    std::vector<ThetaExpr> thetas = {ThetaExpr::rational(mpq_class(3, 2)),
                                     ThetaExpr::exp_rational(1, 2), ThetaExpr::e(),
                                     ThetaExpr::rational(17), ThetaExpr::pi()};
    for (const ThetaExpr& t : thetas) {
        long start = n0(t);
        MValue prev = m_theta(t, start);
        for (long n = start + 1; n <= 500; ++n) {
            MValue cur = m_theta(t, n);
            CHECK(prev.value() <= cur.value());  // eventual monotonicity
            prev = cur;
        }
    }
    // M_theta(n) > n/(theta-1) - 1 for rational theta (exact arithmetic)
    ThetaExpr seventeen = ThetaExpr::rational(17);
    for (long n = 5; n <= 200; ++n) {
        mpq_class bound = mpq_class(n) / 16 - 1;
        CHECK(mpq_class(m_theta(seventeen, n).value()) > bound);
    }
    // [(n-1)/log theta] <= M < n/log theta for 1 < theta <= e
    std::vector<ThetaExpr> sandwich = {ThetaExpr::rational(mpq_class(3, 2)),
                                       ThetaExpr::exp_rational(1, 2), ThetaExpr::e()};
    for (const ThetaExpr& t : sandwich) {
        RealInterval L = log_theta_evaluator(t).enclose(192);
        for (long n = n0(t); n <= 500; ++n) {
            mpz_class m = m_theta(t, n).value();
            RealInterval lowq = idiv(RealInterval::point(mpq_class(n - 1), 192), L);
            RealInterval upq = idiv(RealInterval::point(mpq_class(n), 192), L);
            REQUIRE(floor_q(lowq.lo) == floor_q(lowq.hi));
            CHECK(floor_q(lowq.lo) <= m);
            CHECK(mpq_class(m) < upq.lo);
        }
    }
    for (long n = 2; n <= 500; ++n)
        CHECK(m_theta(ThetaExpr::e(), n).value() == n - 1);  // the corollary itself
}

TEST_CASE("custom sequences: n^{1/n}") {
    SequenceEvaluator seq = nth_root_of_n_sequence();
    CHECK(m_custom(seq, 1).is_infinite());
    CHECK(m_custom(seq, 2) == MValue::of(2));
    CHECK(m_custom(seq, 4) == MValue::of(2));  // 4^{1/4} = 2^{1/2}
    for (long n : {2L, 3L, 5L, 10L, 50L}) {
        auto expect = oracle::m_value(ThetaExpr::rational(n), n);
        CHECK(m_custom(seq, n).value() == expect.value);
    }
}

TEST_CASE("smallest n attaining a value") {
    CHECK(smallest_n_with_value(nth_root_of_n_sequence(), 2, 100) == 2);
    CHECK(smallest_n_with_value(theta_root_sequence(ThetaExpr::e()), 9, 100) == 10);
    // frozen by a brute-force scan over {n^{1/n}}: first M value of 3 is at n = 7
    CHECK(smallest_n_with_value(nth_root_of_n_sequence(), 3, 100) == 7);
}

TEST_CASE("cross-base monotonicity") {
    // 1 < psi < theta implies M_theta(n) <= M_psi(n)
    std::vector<std::pair<ThetaExpr, ThetaExpr>> pairs = {
        {ThetaExpr::rational(17), ThetaExpr::rational(2)},
        {ThetaExpr::pi(), ThetaExpr::rational(mpq_class(3, 2))},
        {ThetaExpr::e(), ThetaExpr::exp_rational(1, 2)},
    };
    for (const auto& [theta, psi] : pairs) {
        long start = std::max(n0(theta), n0(psi));
        for (long n = start; n <= 200; ++n) {
            MValue big = m_theta(theta, n), small = m_theta(psi, n);
            if (big.is_infinite() || small.is_infinite()) continue;
            CHECK(big.value() <= small.value());
        }
    }
}

TEST_CASE("asymptotic ratio within 2/n") {
    std::vector<ThetaExpr> thetas = {ThetaExpr::rational(mpq_class(3, 2)),
                                     ThetaExpr::rational(2), ThetaExpr::rational(17),
                                     ThetaExpr::pi(), ThetaExpr::e(),
                                     ThetaExpr::exp_rational(3, 7)};
    for (const ThetaExpr& t : thetas) {
        Evaluator lg = log_theta_evaluator(t);
        RealInterval L = lg.enclose(128);
        for (long n : {100L, 1000L, 10000L}) {
            mpq_class ratio(m_theta(t, n).value(), n);
            ratio.canonicalize();
            // |ratio - 1/log theta| <= 2/n, via the enclosure of 1/log theta
            RealInterval inv = L.reciprocal();
            CHECK(ratio - inv.hi <= mpq_class(2, n));
            CHECK(inv.lo - ratio <= mpq_class(2, n));
        }
    }
}
