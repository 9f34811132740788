#pragma once

// The two regularizations of divergent multiple polylogarithms.
//
// Shuffle (canonical) side: a word over {dt/t, punctures} diverges from
// leading dt/t letters and trailing letters at the endpoint 1. Every
// word decomposes in the shuffle algebra as a polynomial in the two
// boundary letters with bounded-word coefficients; substituting the
// regularized single-letter values (-L for both, L = log eps) gives the
// asymptotic polynomial, whose constant term is the regularized value.
//
// Stuffle (power-series) side: trailing (1, 1)-entries are removed by
// the quasi-shuffle recursion against Li_1(1-eps) = -L, solving for the
// divergent composition.
//
// Words carry the Kontsevich sign convention: the value of a word is
// the Li-value of its decoded composition, at any level.

#include "mzv/lincomb.hpp"
#include "mzv/words.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

// Polynomial in the formal variable L = log eps, coefficients are
// rational combinations of convergent compositions.
class AsymPoly {
public:
    AsymPoly() = default;
    explicit AsymPoly(const LinComb<Composition>& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    static AsymPoly lambda(const Rational& scale);  // scale * L

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    LinComb<Composition> coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(coeffs_.size())) return {};
        return coeffs_[d];
    }
    const LinComb<Composition>& constant_term() const;
    bool is_zero() const { return coeffs_.empty(); }

    AsymPoly& operator+=(const AsymPoly& o);
    friend AsymPoly operator+(AsymPoly a, const AsymPoly& b) { return a += b; }
    AsymPoly operator-() const;
    friend AsymPoly operator-(const AsymPoly& a, const AsymPoly& b) { return a + (-b); }
    AsymPoly scaled(const Rational& c) const;
    AsymPoly times_lambda(const Rational& scale) const;  // multiply by scale*L

    // Product expanding coefficient products by the stuffle of compositions.
    AsymPoly mul_stuffle(const AsymPoly& o) const;

    friend bool operator==(const AsymPoly& a, const AsymPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const;

private:
    void trim();
    std::vector<LinComb<Composition>> coeffs_;  // index = L-degree
};

struct RegValue {
    enum class Tag { ShuffleReg, StuffleReg };
    LinComb<Composition> value;
    Tag tag;
};

// The Li-expansion of a boundary-convergent word (first letter nonzero,
// last letter != 1): sign (-1)^depth times the i_to_li composition.
LinComb<Composition> decode_word(const Word& w);

// Shuffle-algebra decomposition of w as sum_{i,j} H^i T^j * (bounded word
// combination): H is the value of the single dt/t letter, T the value of
// the single endpoint-1 letter.
std::map<std::pair<int, int>, LinComb<Word>> shuffle_extract(const Word& w);

AsymPoly shuffle_asymptotic(const Word& w);
RegValue shuffle_regularize(const Word& w);

// Independent cross-check of Prop-style boundary-letter insertion:
// w = 0^p u 1^q with bounded u; value = (-1)^{p+q} * sum over insertions
// of q one-letters before the last letter of u and p zero-letters after
// the first letter of u. Requires nonempty u.
LinComb<Composition> shuffle_regularize_insertion(const Word& w);

AsymPoly stuffle_asymptotic(const Composition& c);
RegValue stuffle_regularize(const Composition& c);

// stuffle_regularize(c) - shuffle_regularize(word of c), both as formal
// combinations of convergent compositions.
LinComb<Composition> compare_regularizations(const Composition& c);

// Coefficient-level verification of the regularized generating-series
// identity I(0; a1..am; a_end | t0; ...; tm) =
//   e^{t0 log a_end} I(a1 : ... : a_end | t1-t0, ..., tm-t0)
// over formal atoms, to total degree trunc. Returns true when every
// coefficient matches.
bool generating_regularization_check(int m, int trunc, std::string* report = nullptr);

}  // namespace mzv
