#include "doctest.h"

#include "mzv/tseries.hpp"

using namespace mzv;

TEST_CASE("second shuffle theorem at coefficient level") {
    CheckReport r11 = second_shuffle_check(1, 1, 3);
    CHECK(r11.ok);
    CHECK(r11.coefficients_checked > 0);

    // unit case l = 0
    CheckReport r10 = second_shuffle_check(1, 0, 3);
    CHECK(r10.ok);

    CheckReport r21 = second_shuffle_check(2, 1, 4);
    CHECK(r21.ok);

    CheckReport r22 = second_shuffle_check(2, 2, 4);
    CHECK(r22.ok);

    CHECK_THROWS_AS(second_shuffle_check(3, 2, 4), std::invalid_argument);
}

TEST_CASE("partial fraction identities") {
    for (int m = 2; m <= 4; ++m) {
        CheckReport r = partial_fraction_check(m);
        CHECK(r.ok);
    }
    CHECK_THROWS_AS(partial_fraction_check(5), std::invalid_argument);
}

TEST_CASE("generating-series layer is a ring homomorphism up to truncation") {
    CheckReport r = first_shuffle_series_check(1, 1, 4);
    CHECK(r.ok);
    CheckReport r2 = first_shuffle_series_check(2, 1, 4);
    CHECK(r2.ok);
}

TEST_CASE("li_series coefficients are the expected compositions") {
    std::vector<Argument> xs{Argument::atom("x")};
    TSeries<Composition> s = li_series(xs, {0}, 1, 3);
    // coefficient of t^2 is Li_3(x)
    TExp e{2};
    auto it = s.terms().find(e);
    REQUIRE(it != s.terms().end());
    CHECK(it->second == LinComb<Composition>(Composition{CompEntry{3, Argument::atom("x")}}));
}
