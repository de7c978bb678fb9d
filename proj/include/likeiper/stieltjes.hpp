#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "likeiper/bernoulli.hpp"
#include "likeiper/power_series.hpp"
#include "likeiper/precision.hpp"

namespace likeiper {

inline constexpr int kStieltjesCap = 64;
inline constexpr int kMaxEulerMaclaurinCorrections = 30;

namespace detail {

/// Derivative state for f(x) = ln^n(x)/x: after d derivatives,
/// f^(d)(x) = sum_a c[a] * ln^a(x) / x^(d+1) with exact integer c[a].
/// One differentiation step maps c[a] -> (a+1)*c[a+1] - (d+1)*c[a].
inline void differentiate_log_power_over_x(std::vector<BigInt>& c, int d) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<BigInt> next(c.size());
    for (int a = 0; a <= n; ++a) {
        BigInt v = -BigInt(d + 1) * c[static_cast<std::size_t>(a)];
        if (a + 1 <= n)
            v += BigInt(a + 1) * c[static_cast<std::size_t>(a + 1)];
        next[static_cast<std::size_t>(a)] = std::move(v);
    }
    c = std::move(next);
}

inline Real rational_to_real(const Rational& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

}  // namespace detail

/// Euler-Maclaurin evaluation of the n-th Stieltjes constant at summation
/// cutoff m, carried out at internal_digits of precision:
///   gamma_n = sum_{k=1}^{m} ln^n(k)/k - ln^{n+1}(m)/(n+1) - ln^n(m)/(2m)
///             - sum_j B_{2j}/(2j)! * [d^{2j-1}/dx^{2j-1} ln^n(x)/x]_{x=m}
/// Correction terms are added until the next one drops below
/// 10^{-(target_digits+2)}; if that does not happen within the correction
/// cap, the call is rejected with the achievable precision stated.
inline Real stieltjes_euler_maclaurin(int n, int target_digits, int m, int internal_digits) {
    if (n < 0)
        throw std::invalid_argument("stieltjes: index must be >= 0");
    if (m < 2)
        throw std::invalid_argument("stieltjes: cutoff m must be >= 2");
    ScopedPrecision guard(internal_digits);

    Real sum = 0;
    for (int k = 1; k <= m; ++k)
        sum += pow(log(Real(k)), n) / k;

    const Real log_m = log(Real(m));
    std::vector<Real> log_m_pow(static_cast<std::size_t>(n) + 1);
    log_m_pow[0] = 1;
    for (int a = 1; a <= n; ++a)
        log_m_pow[static_cast<std::size_t>(a)] = log_m_pow[static_cast<std::size_t>(a - 1)] * log_m;

    Real result = sum - log_m_pow[static_cast<std::size_t>(n)] * log_m / (n + 1) -
                  log_m_pow[static_cast<std::size_t>(n)] / (2 * m);

    const Real threshold = pow(Real(10), -(target_digits + 2));

    // c holds f^(d) for f = ln^n(x)/x; advance to odd derivative orders.
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    c[static_cast<std::size_t>(n)] = 1;
    int d = 0;
    BigInt factorial_2j = 1;
    Real m_pow = 1;  // m^{2j}
    Real last_term_mag = 0;
    for (int j = 1; j <= kMaxEulerMaclaurinCorrections; ++j) {
        while (d < 2 * j - 1) {
            detail::differentiate_log_power_over_x(c, d);
            ++d;
        }
        factorial_2j *= BigInt(2 * j - 1) * BigInt(2 * j);
        m_pow *= Real(m) * Real(m);

        Real deriv = 0;
        for (int a = 0; a <= n; ++a)
            deriv += Real(c[static_cast<std::size_t>(a)]) * log_m_pow[static_cast<std::size_t>(a)];
        deriv /= m_pow;

        const Real term = detail::rational_to_real(bernoulli(2 * j)) / Real(factorial_2j) * deriv;
        result -= term;
        last_term_mag = abs(term);
        if (last_term_mag < threshold)
            return result;
    }
    const double achievable = last_term_mag > 0 ? -static_cast<double>(log10(last_term_mag)) : 1e9;
    throw std::runtime_error(
        "stieltjes: Euler-Maclaurin corrections exhausted at cutoff m=" + std::to_string(m) +
        " before reaching " + std::to_string(target_digits) + " digits; achievable about " +
        std::to_string(static_cast<int>(achievable)) + " digits");
}

namespace detail {

/// Internal precision needed to absorb the cancellation between the partial
/// sum (~ ln^{n+1}(m)/(n+1)) and the integral term.
inline int stieltjes_internal_digits(int n, int working_digits, int m) {
    const double cancellation = (n + 1) * std::log10(std::log(static_cast<double>(m)));
    return working_digits + static_cast<int>(std::ceil(std::max(0.0, cancellation))) + 15;
}

}  // namespace detail

/// gamma_n to the context's requested precision, memoized per
/// (n, working_digits). Cutoff m ~ 10 * working_digits.
inline Real stieltjes(int n, const PrecisionContext& ctx, int cap = kStieltjesCap) {
    if (n < 0)
        throw std::invalid_argument("stieltjes: index must be >= 0");
    if (n > cap)
        throw std::invalid_argument("stieltjes: index " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));

    static std::mutex mutex;
    static std::map<std::pair<int, int>, Real> cache;

    const std::pair<int, int> key{n, ctx.working_digits()};
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }

    const int m = 10 * ctx.working_digits();
    const int internal = detail::stieltjes_internal_digits(n, ctx.working_digits(), m);
    Real raw = stieltjes_euler_maclaurin(n, ctx.working_digits(), m, internal);
    Real value = ctx.make_real();
    value = raw;

    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, value);
    return value;
}

/// gamma_0..gamma_max_n with provenance.
struct StieltjesTable {
    enum class Source { computed, reference };

    std::vector<Real> values;  // index n holds gamma_n
    PrecisionContext ctx;
    Source source;
};

inline StieltjesTable compute_stieltjes_table(int max_n, const PrecisionContext& ctx) {
    StieltjesTable table{{}, ctx, StieltjesTable::Source::computed};
    table.values.reserve(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n)
        table.values.push_back(stieltjes(n, ctx));
    return table;
}

/// Parse the shipped reference table: one line per constant, "index value",
/// '#'-prefixed comment lines allowed. Indices must run 0,1,2,... in order.
inline StieltjesTable load_stieltjes_reference(const std::filesystem::path& path,
                                               const PrecisionContext& ctx) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open Stieltjes reference table: " + path.string());
    ScopedPrecision guard(ctx);
    StieltjesTable table{{}, ctx, StieltjesTable::Source::reference};
    std::string line;
    int expected = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream row(line);
        int index = -1;
        std::string value;
        if (!(row >> index >> value))
            throw std::runtime_error("malformed line in Stieltjes reference table: " + line);
        if (index != expected)
            throw std::runtime_error("non-contiguous index " + std::to_string(index) +
                                     " in Stieltjes reference table");
        table.values.push_back(ctx.make_real(Real(value)));
        ++expected;
    }
    if (table.values.empty())
        throw std::runtime_error("empty Stieltjes reference table: " + path.string());
    return table;
}

/// Taylor expansion of (s-1)*zeta(s) in w = s-1:
///   1 + sum_{n>=0} (-1)^n gamma_n w^{n+1} / n!
inline PowerSeries shifted_zeta_series(int N, const PrecisionContext& ctx) {
    if (N < 1)
        throw std::invalid_argument("shifted_zeta_series: order must be >= 1");
    ScopedPrecision guard(ctx);
    std::vector<Real> coeffs(static_cast<std::size_t>(N) + 1, ctx.make_real());
    coeffs[0] = 1;
    BigInt factorial = 1;
    for (int n = 0; n + 1 <= N; ++n) {
        if (n > 0)
            factorial *= n;
        Real c = stieltjes(n, ctx) / Real(factorial);
        coeffs[static_cast<std::size_t>(n + 1)] = ctx.make_real(n % 2 == 0 ? c : Real(-c));
    }
    return PowerSeries(ctx, std::move(coeffs));
}

}  // namespace likeiper
