#pragma once

// Sparse rational-linear combinations over an ordered key type.
// Keys are kept canonical by the modules that insert them; zero
// coefficients are never stored, so iteration order (std::map) is the
// canonical term order used by all serializers.

#include "mzv/rational.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>

namespace mzv {

template <typename T>
class LinComb {
public:
    using Map = std::map<T, Rational>;

    LinComb() = default;
    explicit LinComb(const T& key, const Rational& c = Rational(1)) {
        if (!c.is_zero()) terms_[key] = c;
    }

    static LinComb zero() { return LinComb(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const& { return terms_; }
    // Range-for over a temporary's terms() must not dangle.
    Map terms() && { return std::move(terms_); }

    Rational coeff(const T& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const T& key, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    LinComb operator-() const {
        LinComb r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    LinComb scaled(const Rational& c) const {
        LinComb r;
        if (c.is_zero()) return r;
        for (const auto& [k, co] : terms_) r.terms_.emplace(k, co * c);
        return r;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }
    friend bool operator<(const LinComb& a, const LinComb& b) { return a.terms_ < b.terms_; }

    // Image under a key-wise linear map.
    template <typename U>
    LinComb<U> map(const std::function<LinComb<U>(const T&)>& f) const {
        LinComb<U> r;
        for (const auto& [k, c] : terms_) r += f(k).scaled(c);
        return r;
    }

    std::string str(const std::function<std::string(const T&)>& key_str) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.pretty() << "*" << key_str(k);
        }
        return os.str();
    }

private:
    Map terms_;
};

}  // namespace mzv
