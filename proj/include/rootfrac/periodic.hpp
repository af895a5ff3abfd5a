// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "rootfrac/mfun.hpp"
#include "rootfrac/theta.hpp"

namespace rootfrac {

/// Per-residue correction table for theta = e^{k/l}:
/// k + 2*l*r = 2*k*u_r + v_r with 0 <= v_r <= 2k-1, and
/// chi_r = u_r - 1 - l*r/k = -1/2 - v_r/(2k).
struct ChiRow {
    long r;
    mpz_class u;
    mpz_class v;
    mpq_class chi;
};

struct ChiTable {
    long k = 0, l = 0;
    std::vector<ChiRow> rows;

    const mpq_class& chi(long n) const {
        long r = n % k;
        if (r < 0) r += k;
        return rows[static_cast<size_t>(r)].chi;
    }

    /// Plain-text rendering with columns r, u_r, v_r, chi.
    std::string render() const;
};

/// Requires gcd(k, l) = 1; throws NotCoprime otherwise.
ChiTable chi_table(long k, long l);

/// Smallest integer strictly above max(k/(l log 2), (e^{k/l}-1)(2k+1)).
long threshold(long k, long l);

/// M_{e^{k/l}}(n) = (l/k) n + chi(n mod k) = [l n/k - 1/2], valid for
/// n >= threshold(k, l); throws BelowThreshold under that.
mpz_class m_formula(long k, long l, long n);
/// Same formula without the threshold check, for exploratory comparison.
mpz_class m_formula_unchecked(long k, long l, long n);

/// M_{e^{2/l}}(n) for odd l >= 3: valid for every n >= 1.
mpz_class m_formula_e2l(long l, long n);

enum class CertStatus { Empirical, FormulaVerified };

struct PeriodicityCertificate {
    long k = 0, l = 0;
    long n_start = 0;
    long window_end = 0;
    CertStatus status = CertStatus::Empirical;
};

/// Detect M(n+k) = M(n) + l on a finite window via periodicity of the
/// difference sequence.  values[i] is f(start + i).  Smallest k wins;
/// constant tails (l = 0) are rejected.  Throws WindowTooShort if the
/// window cannot hold max_period * (min_repeats + 1) entries.
std::optional<PeriodicityCertificate> detect_linear_periodicity(
    const std::vector<mpz_class>& values, long max_period, long min_repeats,
    long start = 1);

/// Upgrade to FormulaVerified when theta = e^{k/l} matches the certificate
/// ratio; otherwise re-examine M_theta up to the horizon and throw
/// CertificateViolated at the first failing n (status stays Empirical if
/// the window survives).
PeriodicityCertificate verify_certificate(const ThetaExpr& theta,
                                          const PeriodicityCertificate& cert,
                                          long horizon);

/// Coefficient alpha of a Beatty sequence: an exact rational, or 1/log theta.
struct BeattyAlpha {
    std::optional<mpq_class> exact;
    std::optional<ThetaExpr> reciprocal_log_of;

    static BeattyAlpha rational(const mpq_class& q) { return {q, std::nullopt}; }
    static BeattyAlpha inv_log(const ThetaExpr& t);
};

/// [n*alpha + beta] with a certified floor.
mpz_class beatty(const BeattyAlpha& alpha, const mpq_class& beta, long n);

enum class BeattySide { MinusHalf, PlusHalf };

/// Which of the two Beatty candidates [n/log theta -+ 1/2] equals M_theta(n).
/// Requires n > N0(theta); MinusHalf when the candidates coincide.
BeattySide classify_beatty(const ThetaExpr& theta, long n);

/// All n <= n_max with M_theta(n) = M_psi(n), both finite.
std::vector<long> coincidence_set(const ThetaExpr& theta, const ThetaExpr& psi,
                                  long n_max);

}  // namespace rootfrac
