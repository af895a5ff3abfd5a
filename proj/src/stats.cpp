// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/stats.hpp"

#include "rootfrac/errors.hpp"
#include "rootfrac/mfun.hpp"

namespace rootfrac {

mpq_class ResidueHistogram::max_deviation() const {
    mpq_class best = 0;
    for (long c : counts) {
        mpq_class d = abs(mpq_class(c, total) - mpq_class(1, m));
        if (d > best) best = d;
    }
    return best;
}

ResidueHistogram distribution_mod_m(const std::vector<mpz_class>& values, long m) {
    if (m < 1) throw Error("modulus must be >= 1");
    if (values.empty()) throw Error("empty value list");
    ResidueHistogram h;
    h.m = m;
    h.counts.assign(static_cast<size_t>(m), 0);
    h.total = static_cast<long>(values.size());
    for (const mpz_class& v : values) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mpz_class(m).get_mpz_t());
        ++h.counts[r.get_ui()];
    }
    return h;
}

std::vector<int> gap_binary_sequence(const ThetaExpr& theta, long n_from, long n_to) {
    if (n_from >= n_to) throw Error("gap sequence requires n_from < n_to");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n_to - n_from));
    MValue prev = m_theta(theta, n_from);
    for (long n = n_from + 1; n <= n_to; ++n) {
        MValue cur = m_theta(theta, n);
        if (prev.is_infinite() || cur.is_infinite()) throw GapOutOfRange(n - 1, 0);
        mpz_class gap = cur.value() - prev.value();
        if (gap != 1 && gap != 2)
            throw GapOutOfRange(n - 1, static_cast<long>(gap.get_si()));
        out.push_back(gap == 2 ? 1 : 0);
        prev = cur;
    }
    return out;
}

ExceptionalDensity exceptional_density(const ThetaExpr& theta, long n_max) {
    if (!theta.greater_than_one()) throw Error("density scan requires theta > 1");
    if (n_max < 1) throw Error("n_max must be >= 1");
    ExceptionalDensity d;
    BeattyAlpha alpha = BeattyAlpha::inv_log(theta);
    for (long n = n0(theta) + 1; n <= n_max; ++n) {
        mpz_class cminus = beatty(alpha, mpq_class(-1, 2), n);
        mpz_class cplus = beatty(alpha, mpq_class(1, 2), n);
        if (cminus == cplus) continue;  // candidates coincide: not exceptional
        MValue m = m_theta(theta, n);
        if (!m.is_infinite() && m.value() == cplus) {
            ++d.count;
            d.members.push_back(n);
        }
    }
    d.density = mpq_class(d.count, n_max);
    d.density.canonicalize();
    return d;
}

}  // namespace rootfrac
