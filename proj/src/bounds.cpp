// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/bounds.hpp"

#include <sstream>

#include "rootfrac/errors.hpp"
#include "rootfrac/kernel.hpp"
#include "rootfrac/mfun.hpp"

namespace rootfrac {

namespace {

mpq_class qpow(const mpq_class& base, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

// Dyadic rounding of the reported margin (negative margins round away from 0).
mpq_class dyadic_margin(const mpq_class& m) {
    if (m == 0) return m;
    if (m > 0) return round_down_sig(m, 53);
    return -round_up_sig(-m, 53);
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

BoundReport finish(std::string name, std::string params, RealInterval lhs,
                   RealInterval rhs, Verdict v, const mpq_class& margin) {
    BoundReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.verdict = v;
    r.margin = dyadic_margin(margin);
    return r;
}

}  // namespace

std::string BoundReport::render() const {
    std::ostringstream os;
    os << name << "(" << params << ") ";
    switch (verdict) {
        case Verdict::Holds: os << "holds"; break;
        case Verdict::Fails: os << "FAILS"; break;
        case Verdict::NotApplicable: os << "not-applicable"; break;
    }
    os << " margin=" << margin.get_d();
    return os.str();
}

RealInterval g_interval(const mpq_class& x, long bits) {
    if (x < 1) throw Error("g(x) requires x >= 1");
    // log(1+1/x) ~ 1/x, so the reciprocal magnifies absolute error by ~x^2.
    long extra = 2 * static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) + 8;
    RealInterval L = log_enclosure(1 + mpq_class(1) / x, bits + extra);
    RealInterval r = L.reciprocal();
    r.precision_bits = bits;
    return r;
}

BoundReport check_g_bounds(const mpq_class& x) {
    if (x < 1) throw Error("g bounds require x >= 1");
    mpq_class a = x + mpq_class(1, 2) - 1 / x;  // lower bound (non-strict)
    mpq_class b = x + mpq_class(1, 2);          // upper bound (strict)
    for (long bits = 64; bits <= precision_cap(); bits *= 2) {
        RealInterval G = g_interval(x, bits);
        bool lo_ok = G.lo >= a, hi_ok = G.hi < b;
        bool lo_bad = G.hi < a, hi_bad = G.lo >= b;
        if (lo_ok && hi_ok)
            return finish("g_bounds", "x=" + q_str(x), G,
                          RealInterval(a, b, bits), Verdict::Holds,
                          std::min(G.lo - a, b - G.hi));
        if (lo_bad)
            return finish("g_bounds", "x=" + q_str(x), G,
                          RealInterval(a, b, bits), Verdict::Fails, G.hi - a);
        if (hi_bad)
            return finish("g_bounds", "x=" + q_str(x), G,
                          RealInterval(a, b, bits), Verdict::Fails, b - G.lo);
    }
    throw PrecisionCapExceeded(precision_cap());
}

BoundReport check_g_difference(const mpq_class& x, const mpq_class& y) {
    if (x < 1 || y < x) throw Error("g difference requires 1 <= x <= y");
    mpq_class a = y - x - 1 / y;  // strict lower
    mpq_class b = y - x + 1 / x;  // strict upper
    std::string params = "x=" + q_str(x) + ",y=" + q_str(y);
    if (x == y) {
        RealInterval D = RealInterval::point(0, 64);
        return finish("g_difference", params, D, RealInterval(a, b, 64),
                      Verdict::Holds, std::min(mpq_class(-a), b));
    }
    for (long bits = 64; bits <= precision_cap(); bits *= 2) {
        RealInterval D = g_interval(y, bits) - g_interval(x, bits);
        if (D.lo > a && D.hi < b)
            return finish("g_difference", params, D, RealInterval(a, b, bits),
                          Verdict::Holds, std::min(D.lo - a, b - D.hi));
        if (D.hi <= a)
            return finish("g_difference", params, D, RealInterval(a, b, bits),
                          Verdict::Fails, D.hi - a);
        if (D.lo >= b)
            return finish("g_difference", params, D, RealInterval(a, b, bits),
                          Verdict::Fails, b - D.lo);
    }
    throw PrecisionCapExceeded(precision_cap());
}

std::pair<BoundReport, BoundReport> check_exp_inequalities(const mpq_class& x, long n) {
    if (x <= 0 || n < 1) throw Error("exp inequalities require x > 0, n >= 1");
    std::string params = "x=" + q_str(x) + ",n=" + std::to_string(n);

    // (1+x/n)^n < (1+x/(n+1))^{n+1} < e^x
    mpq_class p1 = qpow(1 + x / n, static_cast<unsigned long>(n));
    mpq_class p2 = qpow(1 + x / (n + 1), static_cast<unsigned long>(n + 1));
    BoundReport less;
    if (p1 >= p2) {
        less = finish("exp_less", params, RealInterval::point(p1, 64),
                      RealInterval::point(p2, 64), Verdict::Fails, p2 - p1);
    } else {
        for (long bits = 64; bits <= precision_cap(); bits *= 2) {
            RealInterval E = exp_enclosure(x, bits);
            if (E.lo > p2) {
                less = finish("exp_less", params, RealInterval::point(p1, bits), E,
                              Verdict::Holds, std::min(p2 - p1, E.lo - p2));
                break;
            }
            if (E.hi <= p2) {
                less = finish("exp_less", params, RealInterval::point(p1, bits), E,
                              Verdict::Fails, E.hi - p2);
                break;
            }
            if (bits * 2 > precision_cap()) throw PrecisionCapExceeded(precision_cap());
        }
    }

    // e^x < (1+x/n)^{n+1} < (1+x/(n-1))^n, only for 0 < x <= 1, n >= 2
    BoundReport more;
    more.name = "exp_more";
    more.params = params;
    if (x > 1 || n < 2) {
        more.verdict = Verdict::NotApplicable;
    } else {
        mpq_class q1 = qpow(1 + x / n, static_cast<unsigned long>(n + 1));
        mpq_class q2 = qpow(1 + x / (n - 1), static_cast<unsigned long>(n));
        if (q1 >= q2) {
            more = finish("exp_more", params, RealInterval::point(q1, 64),
                          RealInterval::point(q2, 64), Verdict::Fails, q2 - q1);
        } else {
            for (long bits = 64; bits <= precision_cap(); bits *= 2) {
                RealInterval E = exp_enclosure(x, bits);
                if (E.hi < q1) {
                    more = finish("exp_more", params, E, RealInterval::point(q1, bits),
                                  Verdict::Holds, std::min(q1 - E.hi, q2 - q1));
                    break;
                }
                if (E.lo >= q1) {
                    more = finish("exp_more", params, E, RealInterval::point(q1, bits),
                                  Verdict::Fails, q1 - E.lo);
                    break;
                }
                if (bits * 2 > precision_cap()) throw PrecisionCapExceeded(precision_cap());
            }
        }
    }
    return {less, more};
}

BoundReport check_main_ineq(const ThetaExpr& theta, long n) {
    if (!theta.greater_than_one()) throw Error("main inequality requires theta > 1");
    if (n < n0(theta)) throw Error("main inequality requires n >= N0(theta)");
    MValue m = m_theta(theta, n);
    if (m.is_infinite()) throw Error("main inequality requires finite M");
    mpq_class x(m.value());
    mpq_class lower = x + mpq_class(1, 2) - 1 / x;  // coefficient of the <= side
    mpq_class upper = x + mpq_class(3, 2);
    std::string params = theta.to_string() + ",n=" + std::to_string(n) +
                         ",x=" + m.value().get_str();
    Evaluator lg = log_theta_evaluator(theta);

    if (lg.exact) {
        mpq_class lhs = lower * *lg.exact, rhs = upper * *lg.exact;
        Verdict v = (lhs <= n && n < rhs) ? Verdict::Holds : Verdict::Fails;
        mpq_class margin = std::min(mpq_class(n - lhs), mpq_class(rhs - n));
        return finish("main_ineq", params, RealInterval::point(lhs, 64),
                      RealInterval::point(rhs, 64), v, margin);
    }
    for (long bits = 64; bits <= precision_cap(); bits *= 2) {
        RealInterval L = lg.enclose(bits);
        RealInterval lhs = L.scaled(lower), rhs = L.scaled(upper);
        if (lhs.hi < n && n < rhs.lo)
            return finish("main_ineq", params, lhs, rhs, Verdict::Holds,
                          std::min(mpq_class(n - lhs.hi), mpq_class(rhs.lo - n)));
        if (lhs.lo > n)
            return finish("main_ineq", params, lhs, rhs, Verdict::Fails, n - lhs.lo);
        if (rhs.hi <= n)
            return finish("main_ineq", params, lhs, rhs, Verdict::Fails, rhs.hi - n);
    }
    throw PrecisionCapExceeded(precision_cap());
}

BoundReport check_gap_bound(const ThetaExpr& theta, long n1, long n2) {
    if (n2 <= n1) throw Error("gap bound requires n2 > n1");
    if (n1 < n0(theta)) throw Error("gap bound requires n1 >= N0(theta)");
    MValue a = m_theta(theta, n1), b = m_theta(theta, n2);
    if (a.is_infinite() || b.is_infinite()) throw Error("gap bound requires finite M");
    mpq_class gap(b.value() - a.value());
    std::string params = theta.to_string() + ",n1=" + std::to_string(n1) +
                         ",n2=" + std::to_string(n2);
    mpq_class dn(n2 - n1);
    Evaluator lg = log_theta_evaluator(theta);

    if (lg.exact) {
        mpq_class rhs = dn / *lg.exact + mpq_class(3, 2);
        Verdict v = gap < rhs ? Verdict::Holds : Verdict::Fails;
        return finish("gap_bound", params, RealInterval::point(gap, 64),
                      RealInterval::point(rhs, 64), v, rhs - gap);
    }
    for (long bits = 64; bits <= precision_cap(); bits *= 2) {
        RealInterval L = lg.enclose(bits);
        RealInterval rhs = idiv(RealInterval::point(dn, bits), L) + mpq_class(3, 2);
        if (gap < rhs.lo)
            return finish("gap_bound", params, RealInterval::point(gap, bits), rhs,
                          Verdict::Holds, rhs.lo - gap);
        if (gap >= rhs.hi)
            return finish("gap_bound", params, RealInterval::point(gap, bits), rhs,
                          Verdict::Fails, rhs.hi - gap);
    }
    throw PrecisionCapExceeded(precision_cap());
}

StrictIncreaseResult check_strict_increase(const ThetaExpr& theta, long n_from, long n_to) {
    if (n_from >= n_to) throw Error("strict increase scan requires n_from < n_to");
    StrictIncreaseResult res;
    MValue prev = m_theta(theta, n_from);
    for (long n = n_from + 1; n <= n_to; ++n) {
        MValue cur = m_theta(theta, n);
        if (!prev.is_infinite() && !cur.is_infinite() && cur.value() == prev.value()) {
            res.strictly_increasing = false;
            res.repeat_at = n - 1;
            return res;
        }
        prev = cur;
    }
    return res;
}

std::vector<mpq_class> bernoulli_numbers(long count) {
    if (count < 1) throw Error("count must be >= 1");
    std::vector<mpq_class> B;
    B.reserve(static_cast<size_t>(count));
    B.push_back(1);
    for (long m = 1; m < count; ++m) {
        mpq_class s = 0;
        for (long j = 0; j < m; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(j));
            s += mpq_class(binom) * B[static_cast<size_t>(j)];
        }
        mpq_class b = -s / (m + 1);
        b.canonicalize();
        B.push_back(b);
    }
    return B;
}

RealInterval bernoulli_approx(const ThetaExpr& theta, long n, long terms) {
    if (!theta.greater_than_one()) throw Error("bernoulli_approx requires theta > 1");
    if (n < 1 || terms < 0) throw Error("bad bernoulli_approx arguments");
    const long bits = 128;
    Evaluator lg = log_theta_evaluator(theta);

    // Convergence domain: log theta < 2 pi n (both sides transcendental or
    // exact, never equal, so escalation decides).
    for (long b = 64;; b *= 2) {
        if (b > precision_cap()) throw PrecisionCapExceeded(precision_cap());
        RealInterval L = lg.enclose(b);
        RealInterval lim = pi_enclosure(b).scaled(mpq_class(2 * n));
        if (L.hi < lim.lo) break;
        if (L.lo >= lim.hi)
            throw ConvergenceDomain("log theta >= 2 pi n: series diverges");
    }

    RealInterval L = lg.enclose(bits + 16);
    RealInterval inv = idiv(RealInterval::point(mpq_class(n), bits), L);  // n/log theta

    if (terms == 0) {
        // For log theta <= n the tail after -1/2 lies in (-1/2, 1/2):
        // e^t - 1 < t + t^2 for 0 < t <= 1 pins 1/(theta^{1/n}-1) inside
        // (n/log theta - 1, n/log theta).  Larger t gets the crude (0, n/log theta).
        if (L.hi <= n)
            return RealInterval(inv.lo - 1, inv.hi, bits);
        if (L.lo > n) return RealInterval(0, inv.hi, bits);
        // t straddles 1: fall back to the union of both bands
        return RealInterval(std::min(mpq_class(0), mpq_class(inv.lo - 1)), inv.hi, bits);
    }

    RealInterval t = L.scaled(mpq_class(1, n));  // log theta / n, positive
    std::vector<mpq_class> B = bernoulli_numbers(2 * terms + 3);
    RealInterval sum = inv - mpq_class(1, 2);
    for (long r = 1; r <= terms; ++r) {
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * r));
        mpq_class coeff = B[static_cast<size_t>(2 * r)] / mpq_class(fact);
        RealInterval tp = ipow_ui(t, static_cast<unsigned long>(2 * r - 1));
        sum = sum + tp.scaled(coeff);
    }
    // Heuristic truncation band: twice the first omitted term's magnitude.
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * (terms + 1)));
    mpq_class coeff = abs(B[static_cast<size_t>(2 * (terms + 1))]) / mpq_class(fact);
    mpq_class tail = 2 * coeff * qpow(std::max(t.hi, mpq_class(1, 1000000)),
                                      static_cast<unsigned long>(2 * terms + 1));
    return RealInterval(sum.lo - tail, sum.hi + tail, bits);
}

}  // namespace rootfrac
