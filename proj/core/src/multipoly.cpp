#include "mzv/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mzv {

long MultiPoly::total_degree() const {
    long deg = 0;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (const auto& [name, e] : m) d += e;
        if (d > deg) deg = d;
    }
    return deg;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [name, e] : mb) {
                long& slot = m[name];
                slot += e;
                if (slot == 0) m.erase(name);
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [name, e] : m) {
            auto it = point.find(name);
            if (it == point.end()) throw std::invalid_argument("MultiPoly::eval: missing variable " + name);
            if (e < 0) throw std::invalid_argument("MultiPoly::eval: negative exponent");
            for (long i = 0; i < e; ++i) t *= it->second;
        }
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        MultiPoly t(c);
        Monomial rest;
        for (const auto& [v, e] : m) {
            if (v == name) {
                if (e < 0) throw std::invalid_argument("MultiPoly::substitute: negative exponent");
                for (long i = 0; i < e; ++i) t *= value;
            } else {
                rest[v] = e;
            }
        }
        MultiPoly shell;
        shell.add_term(rest, Rational(1));
        r += t * shell;
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.pretty();
        for (const auto& [name, e] : m) {
            os << "*" << name;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

MultiPoly binom_poly(const MultiPoly& top, long k) {
    if (k < 0) throw std::domain_error("binom_poly: k = -1 needs binom_fn");
    MultiPoly acc(Rational(1));
    for (long i = 0; i < k; ++i) acc *= top - MultiPoly(Rational(i));
    return acc.scaled(Rational(mpz_class(1)) / Rational(mpz_class(factorial_z(k))));
}

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(Rational(1));
        return;
    }
    if (den_.is_constant()) {
        Rational c = den_.constant_term();
        num_ = num_.scaled(c.inverse());
        den_ = MultiPoly(Rational(1));
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.num_.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFn::str() const {
    if (den_.is_constant() && den_.constant_term().is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RationalFn binom_fn(const MultiPoly& top, long k) {
    if (k >= 0) return RationalFn(binom_poly(top, k));
    if (k == -1) return RationalFn(MultiPoly(Rational(1)), top + MultiPoly(Rational(1)));
    throw std::domain_error("binom_fn: k < -1 unsupported");
}

}  // namespace mzv
