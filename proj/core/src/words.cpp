#include "mzv/words.hpp"

#include <sstream>

namespace mzv {

Argument Argument::times(const Argument& o) const {
    if (kind_ == Kind::Zero || o.kind_ == Kind::Zero)
        throw std::invalid_argument("Argument::times: zero has no product");
    if (kind_ != o.kind_) {
        // The formal unit and exact/root units are absorbing in spirit, but
        // cross-universe products are a type error per the stuffle contract.
        if (is_one()) return o;
        if (o.is_one()) return *this;
        throw std::invalid_argument("Argument::times: incompatible argument universes");
    }
    switch (kind_) {
        case Kind::Formal: {
            Argument r = *this;
            for (const auto& [name, e] : o.exps_) {
                long& slot = r.exps_[name];
                slot += e;
                if (slot == 0) r.exps_.erase(name);
            }
            return r;
        }
        case Kind::Root: {
            if (level_ != o.level_)
                throw std::invalid_argument("Argument::times: mixed root-of-unity levels");
            return root(k_ + o.k_, level_);
        }
        case Kind::Exact:
            return exact(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
        default:
            throw std::invalid_argument("Argument::times: bad kind");
    }
}

Argument Argument::inverse() const {
    switch (kind_) {
        case Kind::Zero:
            throw std::invalid_argument("Argument::inverse: zero is not invertible");
        case Kind::Formal: {
            Argument r = *this;
            for (auto& [name, e] : r.exps_) e = -e;
            return r;
        }
        case Kind::Root:
            return root(-k_, level_);
        case Kind::Exact: {
            Rational n = re_ * re_ + im_ * im_;
            return exact(re_ / n, -im_ / n);
        }
    }
    throw std::invalid_argument("Argument::inverse: bad kind");
}

Argument Argument::power(long e) const {
    if (e == 0) {
        if (kind_ == Kind::Zero) throw std::invalid_argument("Argument::power: 0^0");
        if (kind_ == Kind::Formal) return formal_one();
        if (kind_ == Kind::Root) return one(level_);
        return exact(Rational(1));
    }
    Argument base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    Argument acc = base;
    for (long i = 1; i < n; ++i) acc = acc.times(base);
    return acc;
}

bool operator<(const Argument& a, const Argument& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    switch (a.kind_) {
        case Argument::Kind::Zero: return false;
        case Argument::Kind::Formal: return a.exps_ < b.exps_;
        case Argument::Kind::Root:
            if (a.level_ != b.level_) return a.level_ < b.level_;
            return a.k_ < b.k_;
        case Argument::Kind::Exact:
            if (a.re_ != b.re_) return a.re_ < b.re_;
            return a.im_ < b.im_;
    }
    return false;
}

std::string Argument::str() const {
    switch (kind_) {
        case Kind::Zero: return "0";
        case Kind::Formal: {
            if (exps_.empty()) return "1";
            std::ostringstream os;
            bool first = true;
            for (const auto& [name, e] : exps_) {
                if (!first) os << "*";
                first = false;
                os << name;
                if (e != 1) os << "^" << e;
            }
            return os.str();
        }
        case Kind::Root: {
            if (k_ == 0) return "1";
            std::ostringstream os;
            os << "w" << k_ << "/" << level_;
            return os.str();
        }
        case Kind::Exact: {
            if (im_.is_zero()) return re_.pretty();
            std::ostringstream os;
            os << "(" << re_.pretty() << (im_.sign() >= 0 ? "+" : "-") << im_.abs().pretty() << "i)";
            return os.str();
        }
    }
    return "?";
}

int weight(const Word& w) { return static_cast<int>(w.size()); }

int weight(const Composition& c) {
    int s = 0;
    for (const auto& e : c) s += e.n;
    return s;
}

int depth(const Composition& c) { return static_cast<int>(c.size()); }

bool is_admissible(const Word& w) {
    if (w.empty()) return true;
    return !w.front().is_zero() && w.back().is_zero();
}

bool is_convergent(const Composition& c) {
    if (c.empty()) return true;
    const CompEntry& last = c.back();
    return !(last.n == 1 && last.x.is_one());
}

Word word_encoding(const Composition& c) {
    Word w;
    for (const auto& e : c) {
        if (!e.x.is_one())
            throw std::invalid_argument("word_encoding: only level-1 (all x=1) compositions");
        w.push_back(Argument::one());
        for (int i = 1; i < e.n; ++i) w.push_back(Argument::zero());
    }
    return w;
}

Composition word_decoding(const Word& w) {
    Composition c;
    for (const auto& l : w) {
        if (l.is_zero()) {
            if (c.empty()) throw std::invalid_argument("word_decoding: leading dt/t letter");
            c.back().n += 1;
        } else {
            if (!l.is_one()) throw std::invalid_argument("word_decoding: non-unit puncture letter");
            c.push_back(CompEntry{1, Argument::one()});
        }
    }
    return c;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    for (const auto& l : w) {
        if (l.is_zero())
            s += "0";
        else
            s += "(" + l.str() + ")";
    }
    return s;
}

std::string composition_str(const Composition& c) {
    if (c.empty()) return "e";
    std::ostringstream os;
    for (const auto& e : c) os << "(" << e.n << "," << e.x.str() << ")";
    return os.str();
}

Composition zeta_composition(const std::vector<int>& exponents) {
    Composition c;
    for (int n : exponents) {
        if (n < 1) throw std::invalid_argument("zeta_composition: exponents must be >= 1");
        c.push_back(CompEntry{n, Argument::one()});
    }
    return c;
}

namespace {

void shuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& acc,
                 LinComb<Word>& out) {
    if (i == u.size() && j == v.size()) {
        out.add(acc, Rational(1));
        return;
    }
    if (i < u.size()) {
        acc.push_back(u[i]);
        shuffle_rec(u, i + 1, v, j, acc, out);
        acc.pop_back();
    }
    if (j < v.size()) {
        acc.push_back(v[j]);
        shuffle_rec(u, i, v, j + 1, acc, out);
        acc.pop_back();
    }
}

void stuffle_rec(const Composition& p, std::size_t i, const Composition& q, std::size_t j,
                 Composition& acc, LinComb<Composition>& out) {
    if (i == p.size() && j == q.size()) {
        out.add(acc, Rational(1));
        return;
    }
    if (i < p.size()) {
        acc.push_back(p[i]);
        stuffle_rec(p, i + 1, q, j, acc, out);
        acc.pop_back();
    }
    if (j < q.size()) {
        acc.push_back(q[j]);
        stuffle_rec(p, i, q, j + 1, acc, out);
        acc.pop_back();
    }
    if (i < p.size() && j < q.size()) {
        acc.push_back(CompEntry{p[i].n + q[j].n, p[i].x.times(q[j].x)});
        stuffle_rec(p, i + 1, q, j + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

LinComb<Word> shuffle(const Word& u, const Word& v) {
    LinComb<Word> out;
    Word acc;
    acc.reserve(u.size() + v.size());
    shuffle_rec(u, 0, v, 0, acc, out);
    return out;
}

LinComb<Word> shuffle(const LinComb<Word>& u, const LinComb<Word>& v) {
    LinComb<Word> out;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) out += shuffle(wu, wv).scaled(cu * cv);
    return out;
}

LinComb<Composition> stuffle(const Composition& p, const Composition& q) {
    LinComb<Composition> out;
    Composition acc;
    acc.reserve(p.size() + q.size());
    stuffle_rec(p, 0, q, 0, acc, out);
    return out;
}

LinComb<Composition> stuffle(const LinComb<Composition>& p, const LinComb<Composition>& q) {
    LinComb<Composition> out;
    for (const auto& [cp, ap] : p.terms())
        for (const auto& [cq, aq] : q.terms()) out += stuffle(cp, cq).scaled(ap * aq);
    return out;
}

}  // namespace mzv
