#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "likeiper/format.hpp"
#include "likeiper/power_series.hpp"
#include "likeiper/precision.hpp"
#include "likeiper/stieltjes.hpp"

namespace likeiper {

/// chi[n] = lambda_tiny(n)/n and lambda_star[n] = n*chi[n] for n = 1..N.
/// All accessors are 1-based; the z^0 coefficient of the underlying log
/// series is identically zero and not stored.
class TinySequence {
public:
    static TinySequence from_chi(std::vector<Real> chi, const PrecisionContext& ctx) {
        ScopedPrecision guard(ctx);
        TinySequence t(ctx);
        t.chi_ = std::move(chi);
        t.lambda_star_.reserve(t.chi_.size());
        for (std::size_t i = 0; i < t.chi_.size(); ++i) {
            t.chi_[i].precision(ctx.working_digits());
            t.lambda_star_.push_back(ctx.make_real(Real(static_cast<int>(i) + 1) * t.chi_[i]));
        }
        return t;
    }

    static TinySequence from_lambda_star(std::vector<Real> lambda_star, const PrecisionContext& ctx) {
        ScopedPrecision guard(ctx);
        TinySequence t(ctx);
        t.lambda_star_ = std::move(lambda_star);
        t.chi_.reserve(t.lambda_star_.size());
        for (std::size_t i = 0; i < t.lambda_star_.size(); ++i) {
            t.lambda_star_[i].precision(ctx.working_digits());
            t.chi_.push_back(ctx.make_real(t.lambda_star_[i] / (static_cast<int>(i) + 1)));
        }
        return t;
    }

    int n_max() const { return static_cast<int>(chi_.size()); }
    const PrecisionContext& context() const { return ctx_; }

    const Real& chi(int n) const { return chi_.at(static_cast<std::size_t>(check(n) - 1)); }
    const Real& lambda_star(int n) const {
        return lambda_star_.at(static_cast<std::size_t>(check(n) - 1));
    }

private:
    explicit TinySequence(PrecisionContext ctx) : ctx_(ctx) {}

    int check(int n) const {
        if (n < 1 || n > n_max())
            throw std::out_of_range("TinySequence: index " + std::to_string(n) + " outside 1.." +
                                    std::to_string(n_max()));
        return n;
    }

    PrecisionContext ctx_;
    std::vector<Real> chi_;
    std::vector<Real> lambda_star_;
};

/// chi*(n) for n = 1..N as the Taylor coefficients of
/// log((s-1)*zeta(s)) in z = 1 - 1/s: expand (s-1)*zeta(s) in w = s-1,
/// substitute w = z/(1-z), take the series log.
inline TinySequence tiny_coefficients(int N, const PrecisionContext& ctx) {
    if (N < 1)
        throw std::invalid_argument("tiny_coefficients: N must be >= 1");
    ScopedPrecision guard(ctx);
    PowerSeries outer = shifted_zeta_series(N, ctx);
    std::vector<Real> inner_coeffs(static_cast<std::size_t>(N) + 1, ctx.make_real());
    for (int i = 1; i <= N; ++i)
        inner_coeffs[static_cast<std::size_t>(i)] = 1;  // z/(1-z) = z + z^2 + ...
    PowerSeries inner(ctx, std::move(inner_coeffs));
    PowerSeries logged = series_log(series_compose(outer, inner));

    std::vector<Real> chi(logged.coeffs().begin() + 1, logged.coeffs().end());
    return TinySequence::from_chi(std::move(chi), ctx);
}

/// Order-k binomial difference of lambda*: values[n] is the coefficient of
/// z^{n-1} in (sum_m lambda*(m) z^{m-1}) * (1-z)^k. k=2 gives the paper's
/// phi(n). sign_changes lists each n whose value has the opposite sign of
/// its predecessor; only pure finite-difference entries (n >= k+1) take
/// part, the first k values are boundary terms with missing antecedents.
struct DifferenceSequence {
    int order_k;
    std::vector<Real> values;  // values[i] holds entry n = i+1
    std::vector<int> sign_changes;

    const Real& at(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
    int n_max() const { return static_cast<int>(values.size()); }
};

inline DifferenceSequence difference_sequence(const TinySequence& t, int k) {
    if (k < 1 || k > 6)
        throw std::invalid_argument("difference_sequence: order k must be in 1..6, got " +
                                    std::to_string(k));
    const int N = t.n_max();
    if (N < k + 1)
        throw std::invalid_argument("difference_sequence: need at least k+1 = " +
                                    std::to_string(k + 1) + " entries, have " + std::to_string(N));
    const PrecisionContext& ctx = t.context();
    ScopedPrecision guard(ctx);

    std::vector<Real> lam(static_cast<std::size_t>(N), ctx.make_real());
    for (int n = 1; n <= N; ++n)
        lam[static_cast<std::size_t>(n - 1)] = t.lambda_star(n);
    PowerSeries product = series_mul(PowerSeries(ctx, std::move(lam)), binomial_series(k, N - 1, ctx));

    DifferenceSequence d{k, product.coeffs(), {}};
    for (int n = k + 1; n <= N; ++n) {
        if (d.at(n - 1) * d.at(n) < 0)
            d.sign_changes.push_back(n);
    }
    return d;
}

/// Recurrence approximations to chi*, always seeded with true antecedents.
enum class Scheme {
    A_table,    // (2*lambda*(n-1) - lambda*(n-2)) / n          (paper column A)
    B_table,    // (3*lambda*(n-1) - 3*lambda*(n-2) + lambda*(n-3)) / n  (column B)
    A_literal,  // 2*chi*(n-1) - chi*(n-2)
    B_literal   // 3*lambda*(n-1)/(n-1) - 3*lambda*(n-2)/(n-2) + lambda*(n-3)/(n-3)
};

inline std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::A_table: return "A_table";
        case Scheme::B_table: return "B_table";
        case Scheme::A_literal: return "A_literal";
        case Scheme::B_literal: return "B_literal";
    }
    throw std::logic_error("scheme_name: unknown scheme");
}

inline std::optional<Scheme> scheme_from_name(const std::string& name) {
    if (name == "A_table") return Scheme::A_table;
    if (name == "B_table") return Scheme::B_table;
    if (name == "A_literal") return Scheme::A_literal;
    if (name == "B_literal") return Scheme::B_literal;
    return std::nullopt;
}

/// First n for which a scheme has all its antecedents.
inline int scheme_first_n(Scheme s) {
    switch (s) {
        case Scheme::A_table:
        case Scheme::A_literal: return 3;
        case Scheme::B_table:
        case Scheme::B_literal: return 4;
    }
    throw std::logic_error("scheme_first_n: unknown scheme");
}

struct ApproximationTable {
    Scheme scheme;
    int first_n;
    std::vector<Real> values;  // values[i] holds entry n = first_n + i

    const Real& at(int n) const { return values.at(static_cast<std::size_t>(n - first_n)); }
    int last_n() const { return first_n + static_cast<int>(values.size()) - 1; }
};

inline ApproximationTable approximation(const TinySequence& t, Scheme scheme, int N) {
    const int first = scheme_first_n(scheme);
    if (N < first)
        throw std::invalid_argument("approximation: scheme " + scheme_name(scheme) +
                                    " needs n >= " + std::to_string(first));
    if (t.n_max() < N - 1)
        throw std::invalid_argument("approximation: insufficient antecedents, need chi* up to n = " +
                                    std::to_string(N - 1));
    const PrecisionContext& ctx = t.context();
    ScopedPrecision guard(ctx);

    ApproximationTable out{scheme, first, {}};
    out.values.reserve(static_cast<std::size_t>(N - first) + 1);
    for (int n = first; n <= N; ++n) {
        Real v = ctx.make_real();
        switch (scheme) {
            case Scheme::A_table:
                v = (2 * t.lambda_star(n - 1) - t.lambda_star(n - 2)) / n;
                break;
            case Scheme::B_table:
                v = (3 * t.lambda_star(n - 1) - 3 * t.lambda_star(n - 2) + t.lambda_star(n - 3)) / n;
                break;
            case Scheme::A_literal:
                v = 2 * t.chi(n - 1) - t.chi(n - 2);
                break;
            case Scheme::B_literal:
                v = 3 * t.lambda_star(n - 1) / (n - 1) - 3 * t.lambda_star(n - 2) / (n - 2) +
                    t.lambda_star(n - 3) / (n - 3);
                break;
        }
        out.values.push_back(ctx.make_real(v));
    }
    return out;
}

/// Zero crossing of the straight line through chi* data. Paper mode anchors
/// the line at (1, chi*(1)) with the slope taken from (n1, n2); the general
/// mode anchors at (n1, chi*(n1)).
enum class CrossingAnchor {
    automatic,  // paper mode when (n1,n2) = (2,3), otherwise at_n1
    paper,
    at_n1
};

struct LineCrossing {
    int anchor_n;
    Real slope;
    std::optional<Real> crossing;  // empty when slope >= 0 (no descent to zero)
};

inline LineCrossing line_crossing(const TinySequence& t, int n1, int n2,
                                  CrossingAnchor anchor = CrossingAnchor::automatic) {
    if (n1 < 1 || n1 >= n2 || n2 > t.n_max())
        throw std::invalid_argument("line_crossing: need 1 <= n1 < n2 <= " +
                                    std::to_string(t.n_max()));
    const PrecisionContext& ctx = t.context();
    ScopedPrecision guard(ctx);

    if (anchor == CrossingAnchor::automatic)
        anchor = (n1 == 2 && n2 == 3) ? CrossingAnchor::paper : CrossingAnchor::at_n1;
    const int anchor_n = anchor == CrossingAnchor::paper ? 1 : n1;

    LineCrossing result{anchor_n, ctx.make_real(), std::nullopt};
    result.slope = (t.chi(n2) - t.chi(n1)) / (n2 - n1);
    if (result.slope < 0)
        result.crossing = ctx.make_real(anchor_n + t.chi(anchor_n) / abs(result.slope));
    return result;
}

/// One row of the paper-style comparison table; empty strings are cells the
/// table leaves blank (A starts at n=3, B at n=4). Cells carry the first six
/// decimals, i.e. truncated rather than rounded.
struct ComparisonRow {
    int n;
    std::string a;
    std::string c;
    std::string b;
};

inline std::vector<ComparisonRow> comparison_table(const TinySequence& t, int N) {
    if (N < 2 || N > t.n_max())
        throw std::invalid_argument("comparison_table: need 2 <= N <= " + std::to_string(t.n_max()));
    const auto cell = [](const Real& v) { return format_fixed(v, 6, DecimalRounding::truncate); };

    std::optional<ApproximationTable> a, b;
    if (N >= 3)
        a = approximation(t, Scheme::A_table, N);
    if (N >= 4)
        b = approximation(t, Scheme::B_table, N);

    std::vector<ComparisonRow> rows;
    rows.reserve(static_cast<std::size_t>(N) - 1);
    for (int n = 2; n <= N; ++n) {
        ComparisonRow row{n, "", cell(t.chi(n)), ""};
        if (a && n >= a->first_n)
            row.a = cell(a->at(n));
        if (b && n >= b->first_n)
            row.b = cell(b->at(n));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace likeiper
