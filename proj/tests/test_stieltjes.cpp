#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "likeiper/stieltjes.hpp"
#include "test_util.hpp"

using namespace likeiper;
using namespace likeiper::test;

namespace {

const PrecisionContext ctx(20, 15);

std::filesystem::path reference_path() {
    return std::filesystem::path(LIKEIPER_DATA_DIR) / "stieltjes_reference.txt";
}

/// Limit-definition oracle: partial sum minus the integral, with only the
/// midpoint correction. Error decays like 1/m^2 (up to log factors), so two
/// widely separated cutoffs agreeing pins the leading digits.
Real stieltjes_partial_sum_oracle(int n, int m) {
    ScopedPrecision guard(40);
    Real s = 0;
    for (int k = 1; k <= m; ++k)
        s += pow(log(Real(k)), n) / k;
    Real lm = log(Real(m));
    return s - pow(lm, n + 1) / (n + 1) - pow(lm, n) / (2 * m);
}

/// Euler-Maclaurin zeta for real s > 1, independent of the Stieltjes route.
Real zeta_em_oracle(const Real& s, int cutoff, int corrections) {
    Real sum = 0;
    for (int k = 1; k <= cutoff; ++k)
        sum += pow(Real(k), -s);
    Real K = cutoff;
    sum += pow(K, 1 - s) / (s - 1) - pow(K, -s) / 2;
    Real rising = s;  // s(s+1)...(s+2j-2)
    for (int j = 1; j <= corrections; ++j) {
        if (j > 1) {
            rising *= (s + (2 * j - 3));
            rising *= (s + (2 * j - 2));
        }
        Real b = Real(numerator(bernoulli(2 * j))) / Real(denominator(bernoulli(2 * j)));
        BigInt fact = 1;
        for (int i = 2; i <= 2 * j; ++i)
            fact *= i;
        sum += b / Real(fact) * rising * pow(K, -s - (2 * j - 1));
    }
    return sum;
}

}  // namespace

TEST_CASE("gamma_0 is the Euler-Mascheroni constant") {
    CHECK(approx_eq(stieltjes(0, ctx), "0.5772156649015329", "1e-16"));
}

TEST_CASE("gamma_1 and gamma_2 agree with the limit-definition oracle") {
    for (int n : {1, 2}) {
        Real a = stieltjes_partial_sum_oracle(n, 10000);
        Real b = stieltjes_partial_sum_oracle(n, 100000);
        REQUIRE(abs(a - b) < tol("1e-7"));  // oracle self-consistency
        CHECK(abs(stieltjes(n, ctx) - b) < tol("1e-7"));
    }
}

TEST_CASE("gamma_1 and gamma_2 frozen values") {
    ScopedPrecision guard(40);  // parse the reference literals at full width
    CHECK(approx_eq(stieltjes(1, ctx), "-0.0728158454836767248605863758749", "1e-25"));
    CHECK(approx_eq(stieltjes(2, ctx), "-0.0096903631928723184845303860353", "1e-25"));
}

TEST_CASE("stieltjes rejects indices above the cap") {
    CHECK_THROWS_AS(stieltjes(kStieltjesCap + 1, ctx), std::invalid_argument);
    CHECK_THROWS_AS(stieltjes(-1, ctx), std::invalid_argument);
}

TEST_CASE("euler-maclaurin rejects unreachable precision") {
    // m=4 leaves the correction series far from the 40-digit target.
    CHECK_THROWS_AS(stieltjes_euler_maclaurin(0, 40, 4, 80), std::runtime_error);
}

TEST_CASE("computed table matches the shipped reference table") {
    auto ref = load_stieltjes_reference(reference_path(), ctx);
    REQUIRE(ref.source == StieltjesTable::Source::reference);
    REQUIRE(static_cast<int>(ref.values.size()) >= 21);
    CHECK(approx_eq(ref.values[0], "0.5772156649015329", "1e-15"));

    auto computed = compute_stieltjes_table(20, ctx);
    Real eps = pow(Real(10), -ctx.requested_digits());
    for (int n = 0; n <= 20; ++n)
        CHECK(abs(computed.values[static_cast<std::size_t>(n)] -
                  ref.values[static_cast<std::size_t>(n)]) < eps);
}

TEST_CASE("stieltjes is stable under doubled guard digits") {
    Real eps = pow(Real(10), -ctx.requested_digits());
    PrecisionContext doubled = ctx.with_doubled_guard();
    for (int n : {0, 5, 15, 30})
        CHECK(abs(stieltjes(n, ctx) - stieltjes(n, doubled)) < eps);
}

TEST_CASE("shifted_zeta_series anchors") {
    auto zs = shifted_zeta_series(10, ctx);
    CHECK(zs[0] == 1);
    CHECK(approx_eq(zs[1], "0.5772156649015329", "1e-16"));
}

TEST_CASE("shifted_zeta_series at w=1 recovers zeta(2)") {
    ScopedPrecision guard(ctx);
    auto zs = shifted_zeta_series(40, ctx);
    Real at_one = 0;
    for (int i = 40; i >= 0; --i)
        at_one = at_one + zs[i];  // w = 1
    Real want = zeta_em_oracle(ctx.make_real(2), 200, 8);
    CHECK(abs(at_one - want) < tol("1e-8"));
}

TEST_CASE("shifted_zeta_series at w=0.5 matches an independent zeta evaluation") {
    ScopedPrecision guard(ctx);
    auto zs = shifted_zeta_series(40, ctx);
    Real w = ctx.make_real(Rational(1, 2));
    Real val = 0;
    for (int i = 40; i >= 0; --i)
        val = val * w + zs[i];
    Real want = w * zeta_em_oracle(ctx.make_real(Rational(3, 2)), 100, 12);
    Real eps = pow(Real(10), -(ctx.requested_digits() - 4));
    CHECK(abs(val - want) < eps);
}

TEST_CASE("series coefficients |gamma_n/n!| decrease over n=0..20") {
    auto zs = shifted_zeta_series(22, ctx);
    for (int n = 1; n <= 20; ++n)
        CHECK(abs(zs[n + 1]) < abs(zs[n]));
}

TEST_CASE("reference loader rejects malformed files") {
    CHECK_THROWS_AS(load_stieltjes_reference("/nonexistent/table.txt", ctx), std::runtime_error);
}
