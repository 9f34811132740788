#include "doctest.h"

#include "mzv/multipoly.hpp"
#include "mzv/rational.hpp"

#include <random>

using namespace mzv;

TEST_CASE("rational basics") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).str() == "1/2");
    // the zeta(0,0) arithmetic from the directional discussion
    CHECK(Rational(-1, 12) - Rational(-1, 2) == Rational(5, 12));
    CHECK(Rational(-3, 1).pretty() == "-3");
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational field laws on random triples") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> d(-40, 40);
    auto r = [&] {
        long den = 0;
        while (den == 0) den = d(rng);
        return Rational(d(rng), den);
    };
    for (int i = 0; i < 300; ++i) {
        Rational a = r(), b = r(), c = r();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (unsigned long n = 3; n <= 61; n += 2) CHECK(bernoulli(n) == Rational(0));
    // recurrence residual up to n = 60
    for (unsigned long n = 1; n <= 60; ++n) {
        Rational sum(0);
        for (unsigned long k = 0; k <= n; ++k)
            sum += Rational(mpz_class(binomial_z(n + 1, k))) * bernoulli(k);
        CHECK(sum == Rational(0));
    }
}

TEST_CASE("zeta at non-positive integers") {
    CHECK(zeta_nonpositive(0) == Rational(-1, 2));
    CHECK(zeta_nonpositive(-1) == Rational(-1, 12));
    CHECK(zeta_nonpositive(-2) == Rational(0));
    CHECK(zeta_nonpositive(-3) == Rational(1, 120));
    CHECK_THROWS_AS(zeta_nonpositive(1), std::domain_error);
}

TEST_CASE("multipoly arithmetic and evaluation homomorphism") {
    MultiPoly s = MultiPoly::var("s");
    MultiPoly t = MultiPoly::var("t");
    MultiPoly p = s * s + t.scaled(Rational(3)) - MultiPoly(Rational(1, 2));
    MultiPoly q = s * t - MultiPoly(Rational(2));

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 50; ++i) {
        std::map<std::string, Rational> pt{{"s", Rational(d(rng), 7)}, {"t", Rational(d(rng), 5)}};
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    }
}

TEST_CASE("binom_poly and the k = -1 convention") {
    MultiPoly s = MultiPoly::var("s");
    CHECK(binom_poly(s, 0) == MultiPoly(Rational(1)));
    CHECK(binom_poly(s, 1) == s);
    CHECK(binom_poly(s, 2) == (s * s - s).scaled(Rational(1, 2)));
    RationalFn f = binom_fn(s, -1);
    CHECK(f == RationalFn(MultiPoly(Rational(1)), s + MultiPoly(Rational(1))));
    // binomial over rationals
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("rational function identities") {
    MultiPoly x = MultiPoly::var("x"), y = MultiPoly::var("y");
    RationalFn fx(MultiPoly(Rational(1)), x);
    RationalFn fy(MultiPoly(Rational(1)), y);
    RationalFn fxy(MultiPoly(Rational(1)), x * y);
    CHECK(fx * fy == fxy);
    // 1/(p1 p2) = 1/(p1(p1+p2)) + 1/(p2(p1+p2))
    RationalFn lhs = fx * fy;
    RationalFn rhs = RationalFn(MultiPoly(Rational(1)), x * (x + y)) +
                     RationalFn(MultiPoly(Rational(1)), y * (x + y));
    CHECK(lhs == rhs);
}
