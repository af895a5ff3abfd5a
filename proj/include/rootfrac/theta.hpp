// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

#include "rootfrac/errors.hpp"

namespace rootfrac {

/// Symbolic base theta.  Rational-valued variants carry the exact value;
/// DecimalLiteral is parsed input sugar and is converted to an exact
/// rational eagerly (it never denotes an approximation).
class ThetaExpr {
  public:
    enum class Kind { Rational, ExpRational, Pi, DecimalLiteral };

    static ThetaExpr rational(const mpq_class& v);
    static ThetaExpr rational(long num, long den = 1) {
        return rational(mpq_class(num, den));
    }
    /// e^{k/l}; stored in lowest terms.  e itself is exp_rational(1, 1).
    static ThetaExpr exp_rational(long k, long l);
    static ThetaExpr pi();
    static ThetaExpr e() { return exp_rational(1, 1); }
    /// digits string with an implied decimal exponent, e.g. ("314159", -5).
    static ThetaExpr decimal_literal(const std::string& digits, long exponent);

    Kind kind() const { return kind_; }
    bool is_rational_valued() const {
        return kind_ == Kind::Rational || kind_ == Kind::DecimalLiteral;
    }

    /// Exact value; only for rational-valued variants.
    const mpq_class& rational_value() const { return value_; }
    /// Exponent k/l; only for ExpRational.
    long exp_num() const { return k_; }
    long exp_den() const { return l_; }

    /// True value > 1?  Decidable exactly for every variant.
    bool greater_than_one() const;
    /// True value > 0 and != 1 (precondition of the M entry points).
    void require_valid_base() const;

    std::string to_string() const;

  private:
    ThetaExpr() = default;
    Kind kind_ = Kind::Pi;
    mpq_class value_;  // Rational / DecimalLiteral
    long k_ = 0, l_ = 0;  // ExpRational
};

/// Shared input grammar: `a/b`, `a`, `a.b`, `a.bEn`, `pi`, `e`, `e^k/l`.
ThetaExpr parse_theta(const std::string& text);

}  // namespace rootfrac
