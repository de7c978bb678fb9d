#pragma once

#include <random>
#include <string>
#include <vector>

#include "likeiper/power_series.hpp"
#include "likeiper/precision.hpp"

namespace likeiper::test {

inline Real tol(const std::string& s) { return Real(s); }

inline bool approx_eq(const Real& a, const Real& b, const Real& tolerance) {
    return abs(a - b) <= tolerance;
}

inline bool approx_eq(const Real& a, const std::string& b, const std::string& tolerance) {
    return approx_eq(a, Real(b), Real(tolerance));
}

/// Exact-rational truncated series, used as an independent oracle for the
/// floating-point engine. Deliberately naive.
struct RationalSeries {
    std::vector<Rational> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
};

inline RationalSeries oracle_add(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r{std::vector<Rational>(a.c.size())};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r.c[i] = a.c[i] + b.c[i];
    return r;
}

inline RationalSeries oracle_mul(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries r{std::vector<Rational>(a.c.size())};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            r.c[i] += a.c[j] * b.c[i - j];
    return r;
}

/// Horner composition over the rational series ring (inner constant term 0).
inline RationalSeries oracle_compose(const RationalSeries& outer, const RationalSeries& inner) {
    RationalSeries r{std::vector<Rational>(outer.c.size())};
    r.c[0] = outer.c.back();
    for (int i = outer.order() - 1; i >= 0; --i) {
        r = oracle_mul(r, inner);
        r.c[0] += outer.c[static_cast<std::size_t>(i)];
    }
    return r;
}

inline PowerSeries to_series(const RationalSeries& q, const PrecisionContext& ctx) {
    std::vector<Real> coeffs;
    coeffs.reserve(q.c.size());
    for (const auto& v : q.c)
        coeffs.push_back(ctx.make_real(v));
    return PowerSeries(ctx, std::move(coeffs));
}

inline RationalSeries random_rational_series(std::mt19937& rng, int order, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    RationalSeries r{std::vector<Rational>(static_cast<std::size_t>(order) + 1)};
    for (auto& v : r.c)
        v = dist(rng);
    return r;
}

inline PowerSeries random_real_series(std::mt19937& rng, int order, const PrecisionContext& ctx,
                                      double lo = -2.0, double hi = 2.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<Real> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order; ++i)
        coeffs.push_back(ctx.make_real(dist(rng)));
    return PowerSeries(ctx, std::move(coeffs));
}

inline Real max_coeff_diff(const PowerSeries& a, const PowerSeries& b) {
    Real m{0};
    for (int i = 0; i <= std::min(a.order(), b.order()); ++i)
        m = std::max(m, Real(abs(a[i] - b[i])));
    return m;
}

}  // namespace likeiper::test
