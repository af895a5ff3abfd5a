// SPDX-License-Identifier: Apache-2.0
#include "rootfrac/theta.hpp"

#include <cctype>
#include <numeric>

namespace rootfrac {

ThetaExpr ThetaExpr::rational(const mpq_class& v) {
    if (v <= 0) throw Error("theta must be positive, got " + v.get_str());
    ThetaExpr t;
    t.kind_ = Kind::Rational;
    t.value_ = v;
    t.value_.canonicalize();
    return t;
}

ThetaExpr ThetaExpr::exp_rational(long k, long l) {
    if (k <= 0 || l <= 0) throw Error("e^k/l requires positive k and l");
    long g = std::gcd(k, l);
    ThetaExpr t;
    t.kind_ = Kind::ExpRational;
    t.k_ = k / g;
    t.l_ = l / g;
    return t;
}

ThetaExpr ThetaExpr::pi() {
    ThetaExpr t;
    t.kind_ = Kind::Pi;
    return t;
}

ThetaExpr ThetaExpr::decimal_literal(const std::string& digits, long exponent) {
    if (digits.empty()) throw Error("empty decimal literal");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error("decimal literal digits must be 0-9");
    std::string d = digits;
    long e = exponent;
    while (d.size() > 1 && d.back() == '0') {  // normalize: no trailing zeros
        d.pop_back();
        ++e;
    }
    mpq_class v(mpz_class(d, 10));
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
        v *= p10;
    else
        v /= mpq_class(p10);
    v.canonicalize();
    if (v <= 0) throw Error("theta must be positive");
    ThetaExpr t;
    t.kind_ = Kind::DecimalLiteral;
    t.value_ = v;
    return t;
}

bool ThetaExpr::greater_than_one() const {
    switch (kind_) {
        case Kind::Rational:
        case Kind::DecimalLiteral:
            return value_ > 1;
        case Kind::ExpRational:
        case Kind::Pi:
            return true;
    }
    return false;
}

void ThetaExpr::require_valid_base() const {
    if (is_rational_valued()) {
        if (value_ <= 0) throw Error("theta must be positive");
        if (value_ == 1) throw Error("theta = 1 is excluded");
    }
}

std::string ThetaExpr::to_string() const {
    switch (kind_) {
        case Kind::Rational:
        case Kind::DecimalLiteral:
            return value_.get_str();
        case Kind::ExpRational:
            if (k_ == 1 && l_ == 1) return "e";
            return "e^" + std::to_string(k_) + "/" + std::to_string(l_);
        case Kind::Pi:
            return "pi";
    }
    return "?";
}

namespace {

long parse_long(const std::string& s, std::size_t& i, const std::string& what) {
    std::size_t start = i;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = (s[i] == '-');
        ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("expected " + what, start);
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        ++i;
    }
    return neg ? -v : v;
}

}  // namespace

ThetaExpr parse_theta(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty theta expression", 0);

    if (s == "pi") return ThetaExpr::pi();
    if (s == "e") return ThetaExpr::e();
    if (s.rfind("e^", 0) == 0) {
        std::size_t i = 2;
        long k = parse_long(s, i, "exponent numerator");
        long l = 1;
        if (i < s.size() && s[i] == '/') {
            ++i;
            l = parse_long(s, i, "exponent denominator");
        }
        if (i != s.size()) throw ParseError("trailing characters after e^k/l", i);
        if (k <= 0 || l <= 0) throw ParseError("e^k/l requires positive k and l", 2);
        return ThetaExpr::exp_rational(k, l);
    }

    if (!std::isdigit(static_cast<unsigned char>(s[0])))
        throw ParseError("unrecognized theta expression '" + s + "'", 0);

    std::size_t i = 0;
    std::string intpart;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) intpart += s[i++];

    if (i < s.size() && s[i] == '/') {
        ++i;
        long den = parse_long(s, i, "denominator");
        if (i != s.size()) throw ParseError("trailing characters after rational", i);
        if (den <= 0) throw ParseError("denominator must be positive", i);
        return ThetaExpr::rational(mpq_class(mpz_class(intpart, 10), mpz_class(den)));
    }

    std::string fracpart;
    bool is_decimal = false;
    if (i < s.size() && s[i] == '.') {
        is_decimal = true;
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) fracpart += s[i++];
        if (fracpart.empty()) throw ParseError("expected digits after decimal point", i);
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'E' || s[i] == 'e')) {
        is_decimal = true;
        ++i;
        exp10 = parse_long(s, i, "decimal exponent");
    }
    if (i != s.size()) throw ParseError("trailing characters in number", i);

    if (!is_decimal) return ThetaExpr::rational(mpq_class(mpz_class(intpart, 10)));
    return ThetaExpr::decimal_literal(intpart + fracpart,
                                      exp10 - static_cast<long>(fracpart.size()));
}

}  // namespace rootfrac
