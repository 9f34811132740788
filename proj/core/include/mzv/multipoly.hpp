#pragma once

// Sparse multivariate polynomials over Rational with named variables,
// plus the small rational-function layer needed by the residue formulas
// and the partial-fraction identities (no factorization, no gcd beyond
// scalar content).

#include "mzv/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace mzv {

// Exponent vector keyed by variable name. Zero exponents are not stored.
using Monomial = std::map<std::string, long>;

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }
    static MultiPoly var(const std::string& name, long exp = 1) {
        MultiPoly p;
        Monomial m;
        if (exp != 0) m[name] = exp;
        p.terms_[m] = Rational(1);
        return p;
    }
    static MultiPoly constant(const Rational& c) { return MultiPoly(c); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long total_degree() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const Rational& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
    friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.terms_ < b.terms_; }

    Rational eval(const std::map<std::string, Rational>& point) const;
    MultiPoly substitute(const std::string& name, const MultiPoly& value) const;

    // Sorted-monomial textual form, e.g. "1/12*s2 + -1/2".
    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

// binom_poly(top, k):
//   k >= 0: the degree-k polynomial top*(top-1)*...*(top-k+1)/k!
//   k = -1: the rational function 1/(top+1)  (see RationalFn below)
MultiPoly binom_poly(const MultiPoly& top, long k);

// num/den pair; den is never zero. No cancellation beyond scalar content:
// equality is tested by cross-multiplication.
class RationalFn {
public:
    RationalFn() : num_(Rational(0)), den_(Rational(1)) {}
    explicit RationalFn(const MultiPoly& p) : num_(p), den_(Rational(1)) {}
    RationalFn(MultiPoly num, MultiPoly den);

    static RationalFn constant(const Rational& c) { return RationalFn(MultiPoly(c)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

    // a/b == c/d  <=>  a*d == c*b.
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();
    MultiPoly num_, den_;
};

// The rational-function form of binom_poly, valid for every k >= -1.
RationalFn binom_fn(const MultiPoly& top, long k);

}  // namespace mzv
