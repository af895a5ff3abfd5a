// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/periodic.hpp"

#include <numeric>
#include <sstream>

#include "rootfrac/errors.hpp"
#include "rootfrac/kernel.hpp"

namespace rootfrac {

ChiTable chi_table(long k, long l) {
    if (k < 1 || l < 1) throw Error("chi_table requires positive k and l");
    if (std::gcd(k, l) != 1) throw NotCoprime(k, l);
    ChiTable t;
    t.k = k;
    t.l = l;
    t.rows.reserve(static_cast<size_t>(k));
    for (long r = 0; r < k; ++r) {
        mpz_class lhs = k + 2 * mpz_class(l) * r;  // k + 2 l r = 2 k u + v
        mpz_class u, v;
        mpz_fdiv_qr(u.get_mpz_t(), v.get_mpz_t(), lhs.get_mpz_t(),
                    mpz_class(2 * k).get_mpz_t());
        mpq_class chi_u = mpq_class(u) - 1 - mpq_class(l * r, k);
        mpq_class chi_v = mpq_class(-1, 2) - mpq_class(v, 2 * k);
        chi_u.canonicalize();
        chi_v.canonicalize();
        if (chi_u != chi_v) throw Error("chi identities disagree (internal)");
        t.rows.push_back(ChiRow{r, u, v, chi_u});
    }
    return t;
}

std::string ChiTable::render() const {
    std::ostringstream os;
    os << "r u_r v_r chi\n";
    for (const auto& row : rows)
        os << row.r << " " << row.u.get_str() << " " << row.v.get_str() << " "
           << row.chi.get_str() << "\n";
    return os.str();
}

long threshold(long k, long l) {
    if (std::gcd(k, l) != 1) throw NotCoprime(k, l);
    mpq_class x(k, l);
    x.canonicalize();
    // max(k/(l log 2), (e^{k/l} - 1)(2k+1)); both terms are irrational, so
    // the floor of the max is decidable by escalation.
    for (long b = 64; b <= precision_cap(); b *= 2) {
        RealInterval lg2 = log_enclosure(mpq_class(2), b);
        RealInterval a = idiv(RealInterval::point(x, b), lg2);
        RealInterval e = exp_enclosure(x, b);
        RealInterval bterm = (e - mpq_class(1)).scaled(mpq_class(2 * k + 1));
        mpq_class lo = std::max(a.lo, bterm.lo);
        mpq_class hi = std::max(a.hi, bterm.hi);
        mpz_class flo = floor_q(lo), fhi = floor_q(hi);
        if (flo == fhi) return static_cast<long>(flo.get_si()) + 1;
    }
    throw PrecisionCapExceeded(precision_cap());
}

mpz_class m_formula_unchecked(long k, long l, long n) {
    ChiTable t = chi_table(k, l);
    mpq_class v1 = mpq_class(l * mpz_class(n), k) + t.chi(n);
    v1.canonicalize();
    if (!is_integer(v1)) throw Error("chi formula did not give an integer (internal)");
    mpq_class v2 = mpq_class(l * mpz_class(n), k) - mpq_class(1, 2);
    mpz_class f2 = floor_q(v2);
    if (v1.get_num() != f2) throw Error("the two formula routes disagree (internal)");
    return v1.get_num();
}

mpz_class m_formula(long k, long l, long n) {
    long thr = threshold(k, l);
    if (n < thr) throw BelowThreshold(n, thr);
    return m_formula_unchecked(k, l, n);
}

mpz_class m_formula_e2l(long l, long n) {
    if (l < 3 || l % 2 == 0) throw Error("m_formula_e2l requires odd l >= 3");
    if (n < 1) throw Error("n must be >= 1");
    mpz_class ln = mpz_class(l) * n;
    if (n % 2 == 0) return ln / 2 - 1;
    return (ln - 1) / 2;
}

std::optional<PeriodicityCertificate> detect_linear_periodicity(
    const std::vector<mpz_class>& values, long max_period, long min_repeats,
    long start) {
    if (max_period < 1 || min_repeats < 1) throw Error("bad detector parameters");
    long L = static_cast<long>(values.size());
    if (L < max_period * (min_repeats + 1))
        throw WindowTooShort("window of " + std::to_string(L) +
                             " values cannot certify period " + std::to_string(max_period));
    std::vector<mpz_class> d(static_cast<size_t>(L - 1));
    for (long i = 0; i + 1 < L; ++i) d[static_cast<size_t>(i)] = values[i + 1] - values[i];

    long dlen = L - 1;
    for (long k = 1; k <= max_period; ++k) {
        long j = 0;  // earliest index from which d is k-periodic
        for (long i = dlen - k - 1; i >= 0; --i) {
            if (d[static_cast<size_t>(i)] != d[static_cast<size_t>(i + k)]) {
                j = i + 1;
                break;
            }
        }
        if ((dlen - j) / k < min_repeats) continue;  // need min_repeats full periods
        mpz_class l = 0;
        for (long i = 0; i < k; ++i) l += d[static_cast<size_t>(j + i)];
        if (l <= 0) continue;  // linear periodicity requires positive l
        PeriodicityCertificate c;
        c.k = k;
        c.l = static_cast<long>(l.get_si());
        c.n_start = start + j;
        c.window_end = start + L - 1;
        c.status = CertStatus::Empirical;
        return c;
    }
    return std::nullopt;
}

PeriodicityCertificate verify_certificate(const ThetaExpr& theta,
                                          const PeriodicityCertificate& cert,
                                          long horizon) {
    long g = std::gcd(cert.k, cert.l);
    long k = cert.k / g, l = cert.l / g;
    PeriodicityCertificate out = cert;
    out.k = k;
    out.l = l;

    if (theta.kind() == ThetaExpr::Kind::ExpRational && theta.exp_num() == k &&
        theta.exp_den() == l) {
        long thr = threshold(k, l);
        for (long n = thr; n + k <= horizon; ++n) {
            if (m_formula_unchecked(k, l, n + k) != m_formula_unchecked(k, l, n) + l)
                throw CertificateViolated(n);
        }
        out.status = CertStatus::FormulaVerified;
        out.window_end = horizon;
        return out;
    }

    // No formula backing: re-examine the certified values on the horizon and
    // report the first n where the shift law breaks.
    MValue prev_block_start = m_theta(theta, cert.n_start);
    for (long n = cert.n_start; n + k <= horizon; ++n) {
        MValue a = m_theta(theta, n);
        MValue b = m_theta(theta, n + k);
        if (a.is_infinite() || b.is_infinite() || b.value() != a.value() + l)
            throw CertificateViolated(n);
        (void)prev_block_start;
    }
    out.status = CertStatus::Empirical;
    out.window_end = horizon;
    return out;
}

BeattyAlpha BeattyAlpha::inv_log(const ThetaExpr& t) {
    if (!t.greater_than_one()) throw Error("1/log theta requires theta > 1");
    BeattyAlpha a;
    if (t.kind() == ThetaExpr::Kind::ExpRational) {
        mpq_class q(t.exp_den(), t.exp_num());
        q.canonicalize();
        a.exact = q;
    }
    a.reciprocal_log_of = t;
    return a;
}

mpz_class beatty(const BeattyAlpha& alpha, const mpq_class& beta, long n) {
    if (alpha.exact) return floor_q(*alpha.exact * n + beta);
    const ThetaExpr& t = *alpha.reciprocal_log_of;
    Evaluator lg = log_theta_evaluator(t);
    Evaluator ev;
    ev.enclose = [lg, beta, n](long bits) {
        RealInterval L = lg.enclose(bits + 8);
        RealInterval r = idiv(RealInterval::point(mpq_class(n), bits), L) + beta;
        r.precision_bits = bits;
        return r;
    };
    auto f = certified_floor(ev, 64);
    if (!f) throw PrecisionCapExceeded(precision_cap());
    return *f;
}

BeattySide classify_beatty(const ThetaExpr& theta, long n) {
    if (n <= n0(theta)) throw Error("classify_beatty requires n > N0(theta)");
    BeattyAlpha a = BeattyAlpha::inv_log(theta);
    mpz_class cminus = beatty(a, mpq_class(-1, 2), n);
    MValue m = m_theta(theta, n);
    if (m.is_infinite()) throw Error("M is infinite above N0 (internal)");
    if (m.value() == cminus) return BeattySide::MinusHalf;
    mpz_class cplus = beatty(a, mpq_class(1, 2), n);
    if (m.value() == cplus) return BeattySide::PlusHalf;
    throw Error("M escaped both Beatty candidates (internal)");
}

std::vector<long> coincidence_set(const ThetaExpr& theta, const ThetaExpr& psi,
                                  long n_max) {
    if (!theta.greater_than_one() || !psi.greater_than_one())
        throw Error("coincidence_set requires both bases > 1");
    std::vector<long> out;
    for (long n = 1; n <= n_max; ++n) {
        MValue a = m_theta(theta, n);
        MValue b = m_theta(psi, n);
        if (!a.is_infinite() && !b.is_infinite() && a.value() == b.value())
            out.push_back(n);
    }
    return out;
}

}  // namespace rootfrac
