// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/checks.hpp"

#include <random>
#include <sstream>

#include "rootfrac/errors.hpp"
#include "rootfrac/mfun.hpp"

namespace rootfrac {

void SuiteResult::note(bool pass, const std::string& detail) {
    if (pass) {
        ++passed;
    } else {
        ++failed;
        lines.push_back("FAIL " + detail);
    }
}

void SuiteResult::merge(const SuiteResult& other) {
    passed += other.passed;
    failed += other.failed;
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

std::vector<ThetaExpr> sweep_theta_set() {
    return {ThetaExpr::rational(mpq_class(3, 2)),
            ThetaExpr::rational(2),
            ThetaExpr::exp_rational(1, 2),
            ThetaExpr::e(),
            ThetaExpr::exp_rational(3, 7),
            ThetaExpr::pi(),
            ThetaExpr::rational(17)};
}

SuiteResult run_inequality_sweep(unsigned long seed, long samples) {
    SuiteResult res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num_dist(1, 1000000);
    std::uniform_int_distribution<long> den_dist(1, 1000);
    std::uniform_int_distribution<long> n_dist(2, 1000);
    std::vector<ThetaExpr> thetas = sweep_theta_set();
    std::uniform_int_distribution<size_t> theta_dist(0, thetas.size() - 1);

    auto random_x = [&]() {  // rational in [1, 10^6]
        long d = den_dist(rng);
        std::uniform_int_distribution<long> p(d, 1000000L * d);
        mpq_class x(p(rng), d);
        x.canonicalize();
        return x;
    };

    for (long i = 0; i < samples; ++i) {
        mpq_class x = random_x();
        mpq_class y = x + random_x() - 1;  // y >= x
        long n = n_dist(rng);
        const ThetaExpr& theta = thetas[theta_dist(rng)];

        BoundReport g1 = check_g_bounds(x);
        res.note(g1.holds(), g1.render());
        BoundReport g2 = check_g_difference(x, y);
        res.note(g2.holds(), g2.render());

        // The second exponential comparison needs x in (0, 1]; use 1/x.
        mpq_class xu = 1 / x;
        auto [less, more] = check_exp_inequalities(xu, n);
        res.note(less.holds(), less.render());
        res.note(more.holds(), more.render());

        long nn = std::max(n, n0(theta));
        BoundReport mi = check_main_ineq(theta, nn);
        res.note(mi.holds(), mi.render());
        BoundReport gb = check_gap_bound(theta, nn, nn + 1 + (n % 7));
        res.note(gb.holds(), gb.render());
    }
    std::ostringstream os;
    os << "inequalities: " << res.passed << " passed, " << res.failed << " failed";
    res.lines.push_back(os.str());
    return res;
}

SuiteResult run_periodicity_suite(const ThetaExpr& theta, long window, long horizon) {
    SuiteResult res;
    std::vector<mpz_class> vals;
    long start = 1;
    for (long n = start; n < start + window; ++n) {
        MValue v = m_theta(theta, n);
        if (v.is_infinite()) {
            ++start;  // skip a leading infinite entry; restart the window
            n = start - 1;
            vals.clear();
            continue;
        }
        vals.push_back(v.value());
    }
    auto cert = detect_linear_periodicity(vals, /*max_period=*/24, /*min_repeats=*/3, start);
    if (!cert) {
        res.note(false, "periodicity: no linear-periodic pattern detected for " +
                            theta.to_string());
        return res;
    }
    try {
        PeriodicityCertificate v = verify_certificate(theta, *cert, horizon);
        std::ostringstream os;
        os << "periodicity " << theta.to_string() << ": k=" << v.k << " l=" << v.l
           << (v.status == CertStatus::FormulaVerified ? " formula-verified"
                                                       : " empirical")
           << " to n=" << v.window_end;
        res.note(true, "");
        res.lines.push_back(os.str());
    } catch (const CertificateViolated& e) {
        res.note(false, std::string("periodicity: ") + e.what());
    }
    return res;
}

SuiteResult run_beatty_suite(const ThetaExpr& theta, long n_max) {
    SuiteResult res;
    BeattyAlpha alpha = BeattyAlpha::inv_log(theta);
    long start = n0(theta) + 1;
    long thr = -1;
    if (theta.kind() == ThetaExpr::Kind::ExpRational)
        thr = threshold(theta.exp_num(), theta.exp_den());
    for (long n = start; n <= n_max; ++n) {
        MValue m = m_theta(theta, n);
        if (m.is_infinite()) {
            res.note(false, "beatty: infinite M above N0 at n=" + std::to_string(n));
            continue;
        }
        mpz_class cminus = beatty(alpha, mpq_class(-1, 2), n);
        mpz_class cplus = beatty(alpha, mpq_class(1, 2), n);
        bool member = m.value() == cminus || m.value() == cplus;
        res.note(member, "beatty: M escapes both candidates at n=" + std::to_string(n) +
                             " theta=" + theta.to_string());
        if (thr >= 0 && member && cminus != cplus && m.value() == cplus)
            res.note(n < thr, "beatty: exceptional n=" + std::to_string(n) +
                                  " at or above threshold " + std::to_string(thr));
    }
    std::ostringstream os;
    os << "beatty " << theta.to_string() << ": " << res.passed << " passed, "
       << res.failed << " failed";
    res.lines.push_back(os.str());
    return res;
}

SuiteResult run_stats_suite(long gap_window, long density_window) {
    SuiteResult res;
    ThetaExpr two = ThetaExpr::rational(2);
    try {
        auto gaps = gap_binary_sequence(two, 2, gap_window);
        res.note(static_cast<long>(gaps.size()) == gap_window - 2,
                 "stats: gap window length mismatch");
    } catch (const GapOutOfRange& e) {
        res.note(false, std::string("stats: ") + e.what());
    }

    ThetaExpr pi = ThetaExpr::pi();
    MSequence seq = m_sequence(pi, 2, 90);
    std::vector<mpz_class> vals;
    for (const MValue& v : seq.values)
        if (!v.is_infinite()) vals.push_back(v.value());
    ResidueHistogram h = distribution_mod_m(vals, 3);
    long sum = 0;
    for (long c : h.counts) sum += c;
    res.note(sum == h.total, "stats: histogram counts do not sum to total");

    ExceptionalDensity small = exceptional_density(pi, 100);
    ExceptionalDensity large = exceptional_density(pi, density_window);
    res.note(large.density <= small.density,
             "stats: exceptional density grew with the window");

    std::ostringstream os;
    os << "stats: " << res.passed << " passed, " << res.failed << " failed";
    res.lines.push_back(os.str());
    return res;
}

}  // namespace rootfrac
