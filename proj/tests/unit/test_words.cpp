#include "doctest.h"

#include "mzv/words.hpp"

#include <random>

using namespace mzv;

namespace {

Argument w1() { return Argument::one(); }
Argument w0() { return Argument::zero(); }

Word random_word(std::mt19937_64& rng, int len) {
    Word w;
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < len; ++i) w.push_back(bit(rng) ? w1() : w0());
    return w;
}

Composition random_comp(std::mt19937_64& rng, int maxdepth) {
    std::uniform_int_distribution<int> dd(1, maxdepth), dn(1, 3);
    Composition c;
    int d = dd(rng);
    for (int i = 0; i < d; ++i) c.push_back(CompEntry{dn(rng), Argument::one()});
    return c;
}

mpz_class total_count(const LinComb<Word>& l) {
    mpz_class n = 0;
    for (const auto& [w, c] : l.terms()) {
        REQUIRE(c.den() == 1);
        n += c.num();
    }
    return n;
}

}  // namespace

TEST_CASE("shuffle small cases") {
    Word a{Argument::atom("a")}, b{Argument::atom("b")};
    LinComb<Word> ab = shuffle(a, b);
    CHECK(ab.size() == 2);
    CHECK(ab.coeff(Word{Argument::atom("a"), Argument::atom("b")}) == Rational(1));
    CHECK(ab.coeff(Word{Argument::atom("b"), Argument::atom("a")}) == Rational(1));

    // shuffle(w1 w0, w1 w0) = 4 w1w1w0w0 + 2 w1w0w1w0
    Word z2{w1(), w0()};
    LinComb<Word> sq = shuffle(z2, z2);
    CHECK(sq.coeff(Word{w1(), w1(), w0(), w0()}) == Rational(4));
    CHECK(sq.coeff(Word{w1(), w0(), w1(), w0()}) == Rational(2));
    CHECK(sq.size() == 2);

    // unit
    CHECK(shuffle(Word{}, z2) == LinComb<Word>(z2));
}

TEST_CASE("shuffle count and commutativity/associativity") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dl(0, 3);
    for (int i = 0; i < 40; ++i) {
        Word u = random_word(rng, dl(rng)), v = random_word(rng, dl(rng)), w = random_word(rng, dl(rng));
        CHECK(total_count(shuffle(u, v)) == binomial_z(u.size() + v.size(), u.size()));
        CHECK(shuffle(u, v) == shuffle(v, u));
        CHECK(shuffle(shuffle(u, v), LinComb<Word>(w)) == shuffle(LinComb<Word>(u), shuffle(v, w)));
    }
}

TEST_CASE("stuffle depth-1 times depth-1 is the three-term law") {
    Composition p{CompEntry{2, Argument::atom("x")}};
    Composition q{CompEntry{3, Argument::atom("y")}};
    LinComb<Composition> r = stuffle(p, q);
    CHECK(r.size() == 3);
    CHECK(r.coeff(Composition{CompEntry{2, Argument::atom("x")}, CompEntry{3, Argument::atom("y")}}) == Rational(1));
    CHECK(r.coeff(Composition{CompEntry{3, Argument::atom("y")}, CompEntry{2, Argument::atom("x")}}) == Rational(1));
    CHECK(r.coeff(Composition{CompEntry{5, Argument::atom("x").times(Argument::atom("y"))}}) == Rational(1));
}

TEST_CASE("stuffle depth-2 times depth-1 reproduces the five displayed terms") {
    Argument x1 = Argument::atom("x1"), x2 = Argument::atom("x2"), x3 = Argument::atom("x3");
    Composition p{CompEntry{2, x1}, CompEntry{3, x2}};
    Composition q{CompEntry{4, x3}};
    LinComb<Composition> r = stuffle(p, q);
    CHECK(r.size() == 5);
    CHECK(r.coeff(Composition{{2, x1}, {3, x2}, {4, x3}}) == Rational(1));
    CHECK(r.coeff(Composition{{2, x1}, {4, x3}, {3, x2}}) == Rational(1));
    CHECK(r.coeff(Composition{{4, x3}, {2, x1}, {3, x2}}) == Rational(1));
    CHECK(r.coeff(Composition{{6, x1.times(x3)}, {3, x2}}) == Rational(1));
    CHECK(r.coeff(Composition{{2, x1}, {7, x2.times(x3)}}) == Rational(1));
}

TEST_CASE("stuffle unit, weight preservation, depth bounds") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 60; ++i) {
        Composition p = random_comp(rng, 3), q = random_comp(rng, 3);
        CHECK(stuffle(Composition{}, q) == LinComb<Composition>(q));
        LinComb<Composition> r = stuffle(p, q);
        for (const auto& [c, co] : r.terms()) {
            CHECK(weight(c) == weight(p) + weight(q));
            CHECK(depth(c) >= std::max(depth(p), depth(q)));
            CHECK(depth(c) <= depth(p) + depth(q));
        }
        CHECK(stuffle(p, q) == stuffle(q, p));
    }
}

TEST_CASE("stuffle associativity on random triples") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 30; ++i) {
        Composition p = random_comp(rng, 2), q = random_comp(rng, 2), s = random_comp(rng, 2);
        CHECK(stuffle(stuffle(p, q), LinComb<Composition>(s)) ==
              stuffle(LinComb<Composition>(p), stuffle(q, s)));
    }
}

TEST_CASE("stuffle argument universes") {
    // roots of unity add exponents
    Composition p{CompEntry{1, Argument::root(1, 6)}};
    Composition q{CompEntry{1, Argument::root(4, 6)}};
    LinComb<Composition> r = stuffle(p, q);
    CHECK(r.coeff(Composition{CompEntry{2, Argument::root(5, 6)}}) == Rational(1));
    // mixing universes is a type error
    Composition f{CompEntry{1, Argument::atom("x")}};
    CHECK_THROWS_AS(stuffle(p, f), std::invalid_argument);
}

TEST_CASE("word encoding of MZV compositions") {
    CHECK(word_encoding(zeta_composition({3})) == Word{w1(), w0(), w0()});
    CHECK(word_encoding(zeta_composition({1, 2})) == Word{w1(), w1(), w0()});
    CHECK(word_encoding(zeta_composition({2})) == Word{w1(), w0()});
    CHECK(word_decoding(Word{w1(), w1(), w0()}) == zeta_composition({1, 2}));
    CHECK(is_admissible(word_encoding(zeta_composition({2, 3}))));
    CHECK(!is_admissible(word_encoding(zeta_composition({2, 1}))));
    CHECK(is_convergent(zeta_composition({2, 3})));
    CHECK(!is_convergent(zeta_composition({1})));
    // round-trip on random MZV compositions
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        Composition c = random_comp(rng, 4);
        CHECK(word_decoding(word_encoding(c)) == c);
    }
}

TEST_CASE("serialization forms") {
    CHECK(word_str(Word{w1(), w0(), w0()}) == "(1)00");
    CHECK(composition_str(zeta_composition({2, 1})) == "(2,1)(1,1)");
    CHECK(Argument::root(2, 5).str() == "w2/5");
    CHECK(Argument::atom("x").times(Argument::atom("y").inverse()).str() == "x*y^-1");
}
