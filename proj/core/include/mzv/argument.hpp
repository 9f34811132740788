#pragma once

// The argument universe for polylogarithm indices and I-symbol entries:
// the zero point, formal atoms with free-abelian-group exponents,
// residues mod N (N-th roots of unity), and exact Gaussian rationals.
// Formal atoms multiply by adding exponent vectors; residues add mod N;
// mixing incompatible kinds in a product is a type error.

#include "mzv/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace mzv {

class Argument {
public:
    enum class Kind { Zero, Formal, Root, Exact };

    Argument() : kind_(Kind::Zero) {}

    static Argument zero() { return Argument(); }
    static Argument atom(const std::string& name) {
        Argument a;
        a.kind_ = Kind::Formal;
        a.exps_[name] = 1;
        return a;
    }
    static Argument formal_one() {
        Argument a;
        a.kind_ = Kind::Formal;
        return a;
    }
    static Argument root(long k, long level) {
        if (level < 1) throw std::invalid_argument("Argument::root: level must be >= 1");
        Argument a;
        a.kind_ = Kind::Root;
        a.level_ = level;
        a.k_ = ((k % level) + level) % level;
        return a;
    }
    static Argument one(long level = 1) { return root(0, level); }
    static Argument exact(const Rational& re, const Rational& im = Rational(0)) {
        if (re.is_zero() && im.is_zero()) return zero();
        Argument a;
        a.kind_ = Kind::Exact;
        a.re_ = re;
        a.im_ = im;
        return a;
    }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_one() const {
        switch (kind_) {
            case Kind::Zero: return false;
            case Kind::Formal: return exps_.empty();
            case Kind::Root: return k_ == 0;
            case Kind::Exact: return re_.is_one() && im_.is_zero();
        }
        return false;
    }

    // True when log(arg) is torsion, i.e. vanishes in a Q-vector space:
    // roots of unity (including the Gaussian units) and the formal unit.
    bool log_is_torsion() const {
        switch (kind_) {
            case Kind::Zero: return false;
            case Kind::Formal: return exps_.empty();
            case Kind::Root: return true;
            case Kind::Exact:
                return (im_.is_zero() && (re_ == Rational(1) || re_ == Rational(-1))) ||
                       (re_.is_zero() && (im_ == Rational(1) || im_ == Rational(-1)));
        }
        return false;
    }

    long level() const { return level_; }
    long root_k() const { return k_; }
    const std::map<std::string, long>& exponents() const { return exps_; }
    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    Argument times(const Argument& o) const;
    Argument inverse() const;
    Argument power(long e) const;

    friend bool operator==(const Argument& a, const Argument& b) {
        return a.kind_ == b.kind_ && a.level_ == b.level_ && a.k_ == b.k_ &&
               a.exps_ == b.exps_ && a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Argument& a, const Argument& b) { return !(a == b); }
    friend bool operator<(const Argument& a, const Argument& b);

    std::string str() const;

private:
    Kind kind_;
    long level_ = 0, k_ = 0;            // Root
    std::map<std::string, long> exps_;  // Formal
    Rational re_, im_;                  // Exact
};

}  // namespace mzv
