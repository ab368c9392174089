#include <doctest.h>

#include <random>

#include "gtx/rational.hpp"

using namespace gtx;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = static_cast<long>(rng() % 50) + 1;
    return Rational(num, den);
}

} // namespace

TEST_CASE("rational basics and canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational(1, 0), DenominatorZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DenominatorZero);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-4, 2).is_integer());
    CHECK_FALSE(Rational(-4, 3).is_integer());
    CHECK(Rational(3, 1).is_nonneg_integer());
    CHECK_FALSE(Rational(-3, 1).is_nonneg_integer());
}

TEST_CASE("arithmetic is exact on random values") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK(a + b == b + a);
        CHECK((a - b) + (b - a) == Rational(0));
    }
}

TEST_CASE("binom_rational") {
    CHECK(binom_rational(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binom_rational(Rational(17, 5), 0) == Rational(1));
    CHECK(binom_rational(Rational(5), 3) == Rational(10));
    // Agrees with the integer binomial for nonnegative integer arguments.
    auto int_binom = [](long n, long k) {
        long r = 1;
        for (long j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
        return r;
    };
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binom_rational(Rational(n), static_cast<unsigned>(k)) == Rational(int_binom(n, k)));
    // binom(0, i) = 0 for i >= 1 (the identity twist).
    CHECK(binom_rational(Rational(0), 1) == Rational(0));
    CHECK(binom_rational(Rational(0), 4) == Rational(0));
}
