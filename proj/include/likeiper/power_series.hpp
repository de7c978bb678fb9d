#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "likeiper/precision.hpp"

namespace likeiper {

/// Truncated formal power series: coeffs[i] holds the coefficient of z^i,
/// i = 0..order. Immutable after construction. Binary operations require
/// equal truncation order and equal context; mismatches are rejected, never
/// coerced.
class PowerSeries {
public:
    PowerSeries(PrecisionContext ctx, int order) : ctx_(ctx) {
        if (order < 0)
            throw std::invalid_argument("PowerSeries: order must be >= 0");
        coeffs_.assign(static_cast<std::size_t>(order) + 1, ctx.make_real());
    }

    PowerSeries(PrecisionContext ctx, std::vector<Real> coeffs) : ctx_(ctx), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("PowerSeries: coefficient list must be non-empty");
        for (auto& c : coeffs_)
            c.precision(ctx.working_digits());
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const PrecisionContext& context() const { return ctx_; }
    const Real& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Real>& coeffs() const { return coeffs_; }

    /// Copy truncated (or zero-extended) to the given order.
    PowerSeries truncated(int new_order) const {
        PowerSeries out(ctx_, new_order);
        const int keep = std::min(new_order, order());
        for (int i = 0; i <= keep; ++i)
            out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
        return out;
    }

private:
    PrecisionContext ctx_;
    std::vector<Real> coeffs_;

    friend PowerSeries series_add(const PowerSeries&, const PowerSeries&);
    friend PowerSeries series_sub(const PowerSeries&, const PowerSeries&);
    friend PowerSeries series_mul(const PowerSeries&, const PowerSeries&);
    friend PowerSeries series_div(const PowerSeries&, const PowerSeries&);
    friend PowerSeries series_log(const PowerSeries&);
    friend PowerSeries series_exp(const PowerSeries&);
    friend PowerSeries series_derivative(const PowerSeries&);
    friend PowerSeries series_compose(const PowerSeries&, const PowerSeries&);
};

namespace detail {

inline void require_compatible(const PowerSeries& a, const PowerSeries& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": truncation order mismatch (" +
                                    std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
    if (!(a.context() == b.context()))
        throw std::invalid_argument(std::string(op) + ": precision context mismatch (" +
                                    std::to_string(a.context().working_digits()) + " vs " +
                                    std::to_string(b.context().working_digits()) + " working digits)");
}

}  // namespace detail

inline PowerSeries series_add(const PowerSeries& a, const PowerSeries& b) {
    detail::require_compatible(a, b, "series_add");
    ScopedPrecision guard(a.context());
    PowerSeries out(a.context(), a.order());
    for (int i = 0; i <= a.order(); ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = a[i] + b[i];
    return out;
}

inline PowerSeries series_sub(const PowerSeries& a, const PowerSeries& b) {
    detail::require_compatible(a, b, "series_sub");
    ScopedPrecision guard(a.context());
    PowerSeries out(a.context(), a.order());
    for (int i = 0; i <= a.order(); ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = a[i] - b[i];
    return out;
}

/// Cauchy product truncated at the common order.
inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
    detail::require_compatible(a, b, "series_mul");
    ScopedPrecision guard(a.context());
    PowerSeries out(a.context(), a.order());
    for (int i = 0; i <= a.order(); ++i) {
        Real acc = a.context().make_real();
        for (int j = 0; j <= i; ++j)
            acc += a[j] * b[i - j];
        out.coeffs_[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

/// Long division a/b, requires b[0] != 0.
inline PowerSeries series_div(const PowerSeries& a, const PowerSeries& b) {
    detail::require_compatible(a, b, "series_div");
    if (b[0] == 0)
        throw std::invalid_argument("series_div: divisor has zero constant term");
    ScopedPrecision guard(a.context());
    PowerSeries out(a.context(), a.order());
    for (int i = 0; i <= a.order(); ++i) {
        Real acc = a[i];
        for (int j = 1; j <= i; ++j)
            acc -= b[j] * out.coeffs_[static_cast<std::size_t>(i - j)];
        out.coeffs_[static_cast<std::size_t>(i)] = acc / b[0];
    }
    return out;
}

/// d/dz: coefficient b[i] = (i+1)*a[i+1]; order drops by one.
inline PowerSeries series_derivative(const PowerSeries& a) {
    ScopedPrecision guard(a.context());
    if (a.order() == 0)
        return PowerSeries(a.context(), 0);
    PowerSeries out(a.context(), a.order() - 1);
    for (int i = 0; i < a.order(); ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = (i + 1) * a[i + 1];
    return out;
}

/// log of a series with unit constant term, via L' = a'/a then termwise
/// integration. Contract: exp(series_log(a)) == a to truncation order.
inline PowerSeries series_log(const PowerSeries& a) {
    if (!(a[0] == 1))
        throw std::invalid_argument("series_log requires unit constant term");
    ScopedPrecision guard(a.context());
    PowerSeries out(a.context(), a.order());
    if (a.order() == 0)
        return out;
    PowerSeries q = series_div(series_derivative(a), a.truncated(a.order() - 1));
    for (int i = 0; i < a.order(); ++i)
        out.coeffs_[static_cast<std::size_t>(i + 1)] = q[i] / (i + 1);
    return out;
}

/// exp of a series with zero constant term, via E' = a'*E.
inline PowerSeries series_exp(const PowerSeries& a) {
    if (!(a[0] == 0))
        throw std::invalid_argument("series_exp requires zero constant term");
    ScopedPrecision guard(a.context());
    PowerSeries out(a.context(), a.order());
    out.coeffs_[0] = 1;
    for (int n = 1; n <= a.order(); ++n) {
        Real acc = a.context().make_real();
        for (int k = 1; k <= n; ++k)
            acc += k * a[k] * out.coeffs_[static_cast<std::size_t>(n - k)];
        out.coeffs_[static_cast<std::size_t>(n)] = acc / n;
    }
    return out;
}

/// outer(inner(z)) truncated at the common order; Horner over the series
/// ring. Requires inner constant term zero.
inline PowerSeries series_compose(const PowerSeries& outer, const PowerSeries& inner) {
    detail::require_compatible(outer, inner, "series_compose");
    if (!(inner[0] == 0))
        throw std::invalid_argument("series_compose requires zero constant term in the inner series");
    ScopedPrecision guard(outer.context());
    PowerSeries out(outer.context(), outer.order());
    out.coeffs_[0] = outer[outer.order()];
    for (int i = outer.order() - 1; i >= 0; --i) {
        out = series_mul(out, inner);
        out.coeffs_[0] += outer[i];
    }
    return out;
}

/// Expansion of (1-z)^k: coefficients (-1)^i * C(k,i), zero beyond i = k.
inline PowerSeries binomial_series(int k, int order, const PrecisionContext& ctx) {
    if (k < 0)
        throw std::invalid_argument("binomial_series: k must be >= 0");
    ScopedPrecision guard(ctx);
    BigInt binom = 1;
    std::vector<Real> coeffs(static_cast<std::size_t>(order) + 1, ctx.make_real());
    for (int i = 0; i <= std::min(k, order); ++i) {
        BigInt signed_binom = (i % 2 == 0) ? binom : BigInt(-binom);
        coeffs[static_cast<std::size_t>(i)] = ctx.make_real(signed_binom);
        binom = binom * (k - i) / (i + 1);
    }
    return PowerSeries(ctx, std::move(coeffs));
}

}  // namespace likeiper
