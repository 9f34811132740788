#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
//
// Rational wraps GMP's mpq_class: always in lowest terms, denominator
// positive, zero stored as 0/1. The wrapper pins down the canonical
// text form "p/q" used by every serializer in this project and keeps
// GMP types out of the public headers of the higher layers.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace mzv {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
    static Rational parse(const std::string& s);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // Canonical decimal-free form "p/q" (q > 0, lowest terms).
    std::string str() const;
    // Human form: integers print without "/1".
    std::string pretty() const;

    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational binomial(const Rational& top, unsigned long k);  // top*(top-1)*...*(top-k+1)/k!
mpz_class binomial_z(unsigned long n, unsigned long k);
mpz_class factorial_z(unsigned long n);

// Bernoulli numbers, convention B1 = -1/2 (generating series x/(e^x - 1)).
// Lazily extended behind a lock; values are immutable once computed.
class BernoulliCache {
public:
    static const Rational& get(unsigned long n);
    static Rational beta(unsigned long p);  // beta_0 = 1, beta_p = B_p / p for p > 0
};

inline Rational bernoulli(unsigned long n) { return BernoulliCache::get(n); }

// zeta(n) for integer n <= 0: zeta(0) = -1/2, zeta(1-n) = -B_n/n for n > 1.
// Throws std::domain_error for n > 0.
Rational zeta_nonpositive(long n);

}  // namespace mzv
