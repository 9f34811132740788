#include "mzv/symbols.hpp"

#include <sstream>
#include <stdexcept>

namespace mzv {

int ISymbol::depth() const {
    int d = 0;
    for (const auto& a : middle)
        if (!a.is_zero()) ++d;
    return d;
}

std::string ISymbol::str() const {
    std::ostringstream os;
    os << "I(" << a0.str() << ";";
    for (std::size_t i = 0; i < middle.size(); ++i) os << (i ? "," : " ") << middle[i].str();
    if (middle.empty()) os << " ";
    os << "; " << a_end.str() << ")";
    return os.str();
}

LinComb<ISymbol> canonicalize(const ISymbol& s) {
    if (s.middle.empty()) return LinComb<ISymbol>(ISymbol::unit());
    if (s.a0 == s.a_end) return LinComb<ISymbol>();
    return LinComb<ISymbol>(s);
}

ISymbol make_i_symbol(const std::vector<int>& exponents, const std::vector<Argument>& args,
                      const Argument& a_end) {
    if (exponents.size() != args.size())
        throw std::invalid_argument("make_i_symbol: exponent/argument arity mismatch");
    ISymbol s;
    s.a0 = Argument::zero();
    s.a_end = a_end;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (exponents[i] < 1) throw std::invalid_argument("make_i_symbol: exponents must be >= 1");
        s.middle.push_back(args[i]);
        for (int j = 1; j < exponents[i]; ++j) s.middle.push_back(Argument::zero());
    }
    return s;
}

std::pair<int, ISymbol> li_to_i(const Composition& c) {
    const int m = static_cast<int>(c.size());
    std::vector<int> exps;
    std::vector<Argument> args;
    // a_i = (x_i ... x_m)^{-1}: running product from the tail.
    std::vector<Argument> tail(c.size(), Argument::zero());
    Argument acc;
    for (int i = m - 1; i >= 0; --i) {
        if (c[i].x.is_zero()) throw std::invalid_argument("li_to_i: zero argument");
        acc = (i == m - 1) ? c[i].x : c[i].x.times(acc);
        tail[i] = acc;
    }
    for (int i = 0; i < m; ++i) {
        exps.push_back(c[i].n);
        args.push_back(tail[i].inverse());
    }
    Argument end = Argument::one();
    if (m > 0) {
        switch (args.back().kind()) {
            case Argument::Kind::Formal: end = Argument::formal_one(); break;
            case Argument::Kind::Root: end = Argument::one(args.back().level()); break;
            case Argument::Kind::Exact: end = Argument::exact(Rational(1)); break;
            default: break;
        }
    }
    int sign = (m % 2 == 0) ? 1 : -1;
    return {sign, make_i_symbol(exps, args, end)};
}

std::pair<int, Composition> i_to_li(const ISymbol& s) {
    if (!s.a0.is_zero()) throw std::invalid_argument("i_to_li: symbol must start at 0");
    if (s.a_end.is_zero()) throw std::invalid_argument("i_to_li: endpoint must be nonzero");
    // Split middle into blocks a_i 0^{n_i - 1}.
    std::vector<int> exps;
    std::vector<Argument> args;
    for (const auto& l : s.middle) {
        if (l.is_zero()) {
            if (exps.empty()) throw std::invalid_argument("i_to_li: leading ZeroPoint letter");
            exps.back() += 1;
        } else {
            exps.push_back(1);
            args.push_back(l);
        }
    }
    Composition c;
    const std::size_t m = args.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Argument& next = (i + 1 < m) ? args[i + 1] : s.a_end;
        c.push_back(CompEntry{exps[i], next.times(args[i].inverse())});
    }
    int sign = (m % 2 == 0) ? 1 : -1;
    return {sign, c};
}

Word symbol_word(const ISymbol& s) { return s.middle; }

std::vector<std::pair<ISymbol, ISymbol>> path_compose(const ISymbol& s, const Argument& mid) {
    std::vector<std::pair<ISymbol, ISymbol>> out;
    const std::size_t m = s.middle.size();
    for (std::size_t k = 0; k <= m; ++k) {
        ISymbol left{s.a0, {s.middle.begin(), s.middle.begin() + k}, mid};
        ISymbol right{mid, {s.middle.begin() + k, s.middle.end()}, s.a_end};
        out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

LinComb<ISymbol> reverse(const ISymbol& s) {
    ISymbol r;
    r.a0 = s.a_end;
    r.a_end = s.a0;
    r.middle.assign(s.middle.rbegin(), s.middle.rend());
    Rational sign = (s.middle.size() % 2 == 0) ? Rational(1) : Rational(-1);
    return canonicalize(r).scaled(sign);
}

LinComb<ISymbol> shuffle_fixed_endpoints(const ISymbol& s, const ISymbol& t) {
    if (!(s.a0 == t.a0) || !(s.a_end == t.a_end))
        throw std::invalid_argument("shuffle_fixed_endpoints: endpoint mismatch");
    LinComb<ISymbol> out;
    LinComb<Word> words = shuffle(s.middle, t.middle);
    for (const auto& [w, c] : words.terms()) out += canonicalize(ISymbol{s.a0, w, s.a_end}).scaled(c);
    return out;
}

}  // namespace mzv
