#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace likeiper {

/// Arbitrary-precision real, precision chosen at runtime (decimal digits).
using Real = boost::multiprecision::mpfr_float;
/// Exact rational (GMP-backed).
using Rational = boost::multiprecision::mpq_rational;
/// Exact integer (GMP-backed).
using BigInt = boost::multiprecision::mpz_int;

/// Requested output precision plus guard digits; threads through every
/// computation. All reals created under a context carry working_digits()
/// decimal digits of mantissa (rounded up to the enclosing binary precision).
class PrecisionContext {
public:
    explicit PrecisionContext(int requested_digits = 20, int guard_digits = 15)
        : requested_(requested_digits), guard_(guard_digits) {
        if (requested_digits < 6)
            throw std::invalid_argument("PrecisionContext: requested_digits must be >= 6, got " +
                                        std::to_string(requested_digits));
        if (guard_digits < 10)
            throw std::invalid_argument("PrecisionContext: guard_digits must be >= 10, got " +
                                        std::to_string(guard_digits));
    }

    int requested_digits() const { return requested_; }
    int guard_digits() const { return guard_; }
    int working_digits() const { return requested_ + guard_; }

    /// Same-precision context with guard digits doubled (stability checks).
    PrecisionContext with_doubled_guard() const { return PrecisionContext(requested_, 2 * guard_); }

    bool operator==(const PrecisionContext&) const = default;

    /// A zero Real carrying exactly working precision.
    Real make_real() const {
        Real r{0};
        r.precision(working_digits());
        return r;
    }

    template <typename T>
    Real make_real(const T& value) const {
        Real r = make_real();
        r = value;
        return r;
    }

    Real make_real(const Rational& q) const {
        Real num = make_real(numerator(q));
        Real den = make_real(denominator(q));
        return num / den;
    }

private:
    int requested_;
    int guard_;
};

/// RAII guard: sets the thread-local default mpfr_float precision so that
/// temporaries inside an operation are born at working precision.
class ScopedPrecision {
public:
    explicit ScopedPrecision(int digits10) : saved_(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(digits10));
    }
    explicit ScopedPrecision(const PrecisionContext& ctx) : ScopedPrecision(ctx.working_digits()) {}
    ~ScopedPrecision() { Real::default_precision(saved_); }

    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

}  // namespace likeiper
