#include <catch2/catch_amalgamated.hpp>

#include "likeiper/bernoulli.hpp"

using namespace likeiper;

TEST_CASE("bernoulli small indices") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
}

TEST_CASE("odd Bernoulli numbers above 1 vanish") {
    for (int k = 3; k <= 15; k += 2)
        CHECK(bernoulli(k) == Rational(0));
}

TEST_CASE("bernoulli(12) from the recurrence") {
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli rejects indices above the cap") {
    CHECK_THROWS_AS(bernoulli(kBernoulliCap + 1), std::invalid_argument);
    CHECK_THROWS_AS(bernoulli(-1), std::invalid_argument);
    CHECK_NOTHROW(bernoulli(kBernoulliCap));
}
