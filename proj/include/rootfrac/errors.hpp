// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rootfrac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct PrecisionCapExceeded : Error {
    long requested_bits;
    explicit PrecisionCapExceeded(long bits)
        : Error("precision cap exceeded at " + std::to_string(bits) + " bits"),
          requested_bits(bits) {}
};

struct NotCoprime : Error {
    NotCoprime(long k, long l)
        : Error("gcd(" + std::to_string(k) + ", " + std::to_string(l) + ") != 1") {}
};

struct BelowThreshold : Error {
    BelowThreshold(long n, long thr)
        : Error("n = " + std::to_string(n) + " is below the formula threshold " +
                std::to_string(thr)) {}
};

struct WindowTooShort : Error {
    using Error::Error;
};

struct CertificateViolated : Error {
    long first_failing_n;
    explicit CertificateViolated(long n)
        : Error("linear periodicity fails first at n = " + std::to_string(n)),
          first_failing_n(n) {}
};

struct GapOutOfRange : Error {
    long n;
    GapOutOfRange(long n_, long gap)
        : Error("gap M(n+1)-M(n) = " + std::to_string(gap) + " outside {1,2} at n = " +
                std::to_string(n_)),
          n(n_) {}
};

struct ConvergenceDomain : Error {
    using Error::Error;
};

}  // namespace rootfrac
