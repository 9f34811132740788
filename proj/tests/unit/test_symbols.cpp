#include "doctest.h"

#include "mzv/symbols.hpp"

#include <random>

using namespace mzv;

namespace {
Argument at(const char* n) { return Argument::atom(n); }
}

TEST_CASE("canonicalize") {
    // unit convention I(a;;b) = 1
    ISymbol u{at("a"), {}, at("b")};
    CHECK(canonicalize(u) == LinComb<ISymbol>(ISymbol::unit()));
    // equal endpoints kill the symbol
    ISymbol z{Argument::zero(), {at("a"), at("b")}, Argument::zero()};
    CHECK(canonicalize(z).is_zero());
    // generic symbols are stored verbatim
    ISymbol s{Argument::zero(), {at("a")}, Argument::one()};
    CHECK(canonicalize(s) == LinComb<ISymbol>(s));
    CHECK(canonicalize(canonicalize(s).terms().begin()->first) == canonicalize(s));
}

TEST_CASE("li_to_i matches the displayed conversions") {
    Argument x = at("x"), y = at("y");
    // Li_2(x) -> (-1, I(0; x^-1, 0; 1))
    auto [s1, i1] = li_to_i(Composition{CompEntry{2, x}});
    CHECK(s1 == -1);
    CHECK(i1 == ISymbol{Argument::zero(), {x.inverse(), Argument::zero()}, Argument::formal_one()});
    // Li_{1,1}(x,y) -> (+1, I(0; (xy)^-1, y^-1; 1))
    auto [s2, i2] = li_to_i(Composition{CompEntry{1, x}, CompEntry{1, y}});
    CHECK(s2 == 1);
    CHECK(i2 == ISymbol{Argument::zero(),
                        {x.times(y).inverse(), y.inverse()},
                        Argument::formal_one()});
    // zeta(2) = Li_2(1) -> (-1, I(0; 1, 0; 1))
    auto [s3, i3] = li_to_i(zeta_composition({2}));
    CHECK(s3 == -1);
    CHECK(i3 == ISymbol{Argument::zero(), {Argument::one(), Argument::zero()}, Argument::one()});
}

TEST_CASE("li_to_i then i_to_li is the identity") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> dd(1, 4), dn(1, 3), dk(1, 5);
    for (int i = 0; i < 80; ++i) {
        Composition c;
        int d = dd(rng);
        bool formal = i % 2 == 0;
        for (int j = 0; j < d; ++j) {
            Argument x = formal ? Argument::atom("x" + std::to_string(j))
                                : Argument::root(dk(rng), 6);
            c.push_back(CompEntry{dn(rng), x});
        }
        if (weight(c) > 8) continue;
        auto [sign, sym] = li_to_i(c);
        auto [sign2, back] = i_to_li(sym);
        CHECK(sign == sign2);
        CHECK(back == c);
    }
}

TEST_CASE("reverse") {
    ISymbol s{Argument::zero(), {at("a")}, Argument::one()};
    LinComb<ISymbol> r = reverse(s);
    CHECK(r == LinComb<ISymbol>(ISymbol{Argument::one(), {at("a")}, Argument::zero()}, Rational(-1)));
    // reverse of reverse is the identity
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dl(0, 4), dA(0, 2);
    auto arg = [&](int k) {
        if (k == 0) return Argument::zero();
        return Argument::atom("a" + std::to_string(k));
    };
    for (int i = 0; i < 50; ++i) {
        ISymbol t{arg(dA(rng)), {}, arg(dA(rng) + 1)};
        int len = dl(rng);
        for (int j = 0; j < len; ++j) t.middle.push_back(arg(dA(rng)));
        LinComb<ISymbol> once = reverse(t);
        LinComb<ISymbol> twice;
        for (const auto& [k, c] : once.terms()) twice += reverse(k).scaled(c);
        CHECK(twice == canonicalize(t));
    }
    // weight 0: I(a;;b) -> 1
    CHECK(reverse(ISymbol{at("a"), {}, at("b")}) == LinComb<ISymbol>(ISymbol::unit()));
}

TEST_CASE("path_compose") {
    // m=1 with unit collapse: I(a;x;b) = I(c;x;b) + I(a;x;c)
    ISymbol s{at("a"), {at("x")}, at("b")};
    auto pairs = path_compose(s, at("c"));
    CHECK(pairs.size() == 2);
    LinComb<ISymbol> total;
    for (const auto& [l, r] : pairs) {
        LinComb<ISymbol> lc = canonicalize(l), rc = canonicalize(r);
        // multiply: unit symbol acts as 1
        for (const auto& [kl, cl] : lc.terms())
            for (const auto& [kr, cr] : rc.terms()) {
                if (kl.is_unit())
                    total.add(kr, cl * cr);
                else if (kr.is_unit())
                    total.add(kl, cl * cr);
                else
                    REQUIRE(false);
            }
    }
    LinComb<ISymbol> expect;
    expect.add(ISymbol{at("c"), {at("x")}, at("b")}, Rational(1));
    expect.add(ISymbol{at("a"), {at("x")}, at("c")}, Rational(1));
    CHECK(total == expect);

    // path_compose with midpoint = a_end collapses to the original symbol
    ISymbol t{Argument::zero(), {at("x"), at("y")}, at("b")};
    auto parts = path_compose(t, at("b"));
    LinComb<ISymbol> sum;
    for (const auto& [l, r] : parts) {
        LinComb<ISymbol> lc = canonicalize(l), rc = canonicalize(r);
        for (const auto& [kl, cl] : lc.terms())
            for (const auto& [kr, cr] : rc.terms()) {
                if (kl.is_unit())
                    sum.add(kr, cl * cr);
                else if (kr.is_unit())
                    sum.add(kl, cl * cr);
            }
    }
    CHECK(sum == canonicalize(t));
}

TEST_CASE("shuffle at fixed endpoints") {
    ISymbol s{at("p"), {at("a")}, at("q")};
    ISymbol t{at("p"), {at("b")}, at("q")};
    LinComb<ISymbol> r = shuffle_fixed_endpoints(s, t);
    CHECK(r.size() == 2);
    CHECK(r.coeff(ISymbol{at("p"), {at("a"), at("b")}, at("q")}) == Rational(1));
    CHECK(r.coeff(ISymbol{at("p"), {at("b"), at("a")}, at("q")}) == Rational(1));

    // weight-0 factor is the identity
    ISymbol unit{at("p"), {}, at("q")};
    CHECK(shuffle_fixed_endpoints(s, unit) == canonicalize(s));

    ISymbol bad{at("p"), {at("a")}, at("r")};
    CHECK_THROWS_AS(shuffle_fixed_endpoints(s, bad), std::invalid_argument);

    // term count with multiplicity is C(ms+mt, ms): distinct letters
    ISymbol s2{at("p"), {at("a"), at("b")}, at("q")};
    ISymbol t2{at("p"), {at("c")}, at("q")};
    mpz_class n = 0;
    for (const auto& [k, c] : shuffle_fixed_endpoints(s2, t2).terms()) n += c.num();
    CHECK(n == binomial_z(3, 2));
}

TEST_CASE("symbol text form") {
    ISymbol s{Argument::zero(), {Argument::one(), Argument::zero()}, Argument::one()};
    CHECK(s.str() == "I(0; 1,0; 1)");
}
