#include "mzv/regularization.hpp"

#include "mzv/symbols.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace mzv {

void AsymPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

AsymPoly AsymPoly::lambda(const Rational& scale) {
    AsymPoly p;
    if (scale.is_zero()) return p;
    p.coeffs_.resize(2);
    p.coeffs_[1] = LinComb<Composition>(Composition{}, scale);
    return p;
}

const LinComb<Composition>& AsymPoly::constant_term() const {
    static const LinComb<Composition> kZero;
    return coeffs_.empty() ? kZero : coeffs_[0];
}

AsymPoly& AsymPoly::operator+=(const AsymPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

AsymPoly AsymPoly::operator-() const {
    AsymPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

AsymPoly AsymPoly::scaled(const Rational& c) const {
    AsymPoly r;
    if (c.is_zero()) return r;
    for (const auto& co : coeffs_) r.coeffs_.push_back(co.scaled(c));
    r.trim();
    return r;
}

AsymPoly AsymPoly::times_lambda(const Rational& scale) const {
    AsymPoly r;
    if (scale.is_zero() || coeffs_.empty()) return r;
    r.coeffs_.resize(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + 1] = coeffs_[i].scaled(scale);
    return r;
}

AsymPoly AsymPoly::mul_stuffle(const AsymPoly& o) const {
    AsymPoly r;
    if (coeffs_.empty() || o.coeffs_.empty()) return r;
    r.coeffs_.resize(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (coeffs_[i].is_zero() || o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += stuffle(coeffs_[i], o.coeffs_[j]);
        }
    r.trim();
    return r;
}

std::string AsymPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[d].str([](const Composition& c) { return composition_str(c); }) << ")";
        if (d == 1) os << "*L";
        if (d > 1) os << "*L^" << d;
    }
    if (first) return "0";
    return os.str();
}

LinComb<Composition> decode_word(const Word& w) {
    if (w.empty()) return LinComb<Composition>(Composition{});
    Argument end = Argument::one();
    for (const auto& l : w) {
        if (l.is_zero()) continue;
        switch (l.kind()) {
            case Argument::Kind::Formal: end = Argument::formal_one(); break;
            case Argument::Kind::Root: end = Argument::one(l.level()); break;
            case Argument::Kind::Exact: end = Argument::exact(Rational(1)); break;
            default: break;
        }
        break;
    }
    // The (-1)^m of i_to_li cancels against the Kontsevich sign carried by
    // the word, so the value of a word is exactly the Li of its composition.
    auto [sign, comp] = i_to_li(ISymbol{Argument::zero(), w, end});
    (void)sign;
    return LinComb<Composition>(comp);
}

namespace {

bool head_divergent(const Word& w) { return !w.empty() && w.front().is_zero(); }
bool tail_divergent(const Word& w) { return !w.empty() && w.back().is_one(); }

using Extract = std::map<std::pair<int, int>, LinComb<Word>>;

void extract_add(Extract& e, int i, int j, const LinComb<Word>& c) {
    if (c.is_zero()) return;
    auto& slot = e[{i, j}];
    slot += c;
    if (slot.is_zero()) e.erase({i, j});
}

Extract extract_scaled(const Extract& e, const Rational& c) {
    Extract r;
    for (const auto& [k, v] : e) r[k] = v.scaled(c);
    return r;
}

// Tail extraction: strip trailing endpoint-1 letters.
Extract tail_extract(const Word& w) {
    if (!tail_divergent(w)) {
        Extract e;
        extract_add(e, 0, 0, LinComb<Word>(w));
        return e;
    }
    int q = 0;
    for (auto it = w.rbegin(); it != w.rend() && it->is_one(); ++it) ++q;
    const std::size_t len = w.size();
    const std::size_t body = len - static_cast<std::size_t>(q);  // letters before the block
    Word u(w.begin(), w.end() - 1);
    Extract acc;
    // u sh [1] = q*w + insertions into the body part.
    Extract eu = tail_extract(u);
    for (const auto& [k, v] : eu) extract_add(acc, k.first, k.second + 1, v);
    for (std::size_t s = 0; s < body; ++s) {
        Word ins;
        ins.reserve(len);
        ins.insert(ins.end(), w.begin(), w.begin() + s);
        ins.push_back(w.back());
        ins.insert(ins.end(), w.begin() + s, w.end() - 1);
        Extract es = tail_extract(ins);
        for (const auto& [k, v] : es) extract_add(acc, k.first, k.second, v.scaled(Rational(-1)));
    }
    return extract_scaled(acc, Rational(1, q));
}

// Head extraction on a tail-free word: strip leading dt/t letters.
Extract head_extract(const Word& w) {
    if (!head_divergent(w)) {
        Extract e;
        extract_add(e, 0, 0, LinComb<Word>(w));
        return e;
    }
    int p = 0;
    for (auto it = w.begin(); it != w.end() && it->is_zero(); ++it) ++p;
    const std::size_t len = w.size();
    const std::size_t body = len - static_cast<std::size_t>(p);
    Word u(w.begin() + 1, w.end());
    Extract acc;
    Extract eu = head_extract(u);
    for (const auto& [k, v] : eu) extract_add(acc, k.first + 1, k.second, v);
    // Insertions of a dt/t letter into the body at offsets 1..body.
    for (std::size_t s = 1; s <= body; ++s) {
        Word ins;
        ins.reserve(len);
        std::size_t cut = static_cast<std::size_t>(p) - 1 + s;
        ins.insert(ins.end(), w.begin() + 1, w.begin() + 1 + cut);
        ins.push_back(Argument::zero());
        ins.insert(ins.end(), w.begin() + 1 + cut, w.end());
        Extract es = head_extract(ins);
        for (const auto& [k, v] : es) extract_add(acc, k.first, k.second, v.scaled(Rational(-1)));
    }
    return extract_scaled(acc, Rational(1, p));
}

}  // namespace

Extract shuffle_extract(const Word& w) {
    Extract tails = tail_extract(w);
    Extract out;
    for (const auto& [ht, comb] : tails) {
        for (const auto& [word, c] : comb.terms()) {
            Extract heads = head_extract(word);
            for (const auto& [hh, hcomb] : heads)
                extract_add(out, ht.first + hh.first, ht.second + hh.second, hcomb.scaled(c));
        }
    }
    return out;
}

AsymPoly shuffle_asymptotic(const Word& w) {
    if (w.empty()) return AsymPoly(LinComb<Composition>(Composition{}));
    Extract parts = shuffle_extract(w);
    AsymPoly out;
    for (const auto& [ht, comb] : parts) {
        int d = ht.first + ht.second;
        LinComb<Composition> decoded;
        for (const auto& [word, c] : comb.terms()) decoded += decode_word(word).scaled(c);
        // Both boundary letters regularize to -L.
        Rational sign = (d % 2 == 0) ? Rational(1) : Rational(-1);
        AsymPoly term;
        term += AsymPoly(decoded.scaled(sign));
        for (int i = 0; i < d; ++i) term = term.times_lambda(Rational(1));
        out += term;
    }
    return out;
}

RegValue shuffle_regularize(const Word& w) {
    if (w.empty()) return RegValue{LinComb<Composition>(Composition{}), RegValue::Tag::ShuffleReg};
    return RegValue{shuffle_asymptotic(w).constant_term(), RegValue::Tag::ShuffleReg};
}

LinComb<Composition> shuffle_regularize_insertion(const Word& w) {
    std::size_t p = 0, q = 0;
    while (p < w.size() && w[p].is_zero()) ++p;
    while (q < w.size() - p && w[w.size() - 1 - q].is_one()) ++q;
    Word u(w.begin() + p, w.end() - q);
    if (u.empty())
        throw std::invalid_argument("shuffle_regularize_insertion: empty bounded part");
    Argument one = Argument::one();
    for (const auto& l : u) {
        if (l.is_zero()) continue;
        switch (l.kind()) {
            case Argument::Kind::Formal: one = Argument::formal_one(); break;
            case Argument::Kind::Root: one = Argument::one(l.level()); break;
            case Argument::Kind::Exact: one = Argument::exact(Rational(1)); break;
            default: break;
        }
        break;
    }

    // Interleave p zero-letters and q one-letters into u: each zero must
    // land after u's first letter, each one before u's last letter. The
    // two tuples interleave freely with each other.
    LinComb<Word> words;
    Word acc;
    acc.reserve(u.size() + p + q);
    std::function<void(std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t i, std::size_t z, std::size_t o) {
            if (i == u.size() && z == 0 && o == 0) {
                words.add(acc, Rational(1));
                return;
            }
            if (i < u.size()) {
                acc.push_back(u[i]);
                rec(i + 1, z, o);
                acc.pop_back();
            }
            if (z > 0 && i >= 1) {
                acc.push_back(Argument::zero());
                rec(i, z - 1, o);
                acc.pop_back();
            }
            if (o > 0 && i < u.size()) {
                acc.push_back(one);
                rec(i, z, o - 1);
                acc.pop_back();
            }
        };
    rec(0, p, q);

    Rational sign = ((p + q) % 2 == 0) ? Rational(1) : Rational(-1);
    LinComb<Composition> out;
    for (const auto& [word, c] : words.terms()) out += decode_word(word).scaled(c * sign);
    return out;
}

AsymPoly stuffle_asymptotic(const Composition& c) {
    if (is_convergent(c)) return AsymPoly(LinComb<Composition>(c));
    int j = 0;
    for (auto it = c.rbegin(); it != c.rend() && it->n == 1 && it->x.is_one(); ++it) ++j;
    Composition u(c.begin(), c.end() - 1);
    Composition z{c.back()};
    // u * z = j*c + rest; solve for c.
    LinComb<Composition> rest = stuffle(u, z);
    rest.add(c, Rational(-j));
    AsymPoly acc = stuffle_asymptotic(u).times_lambda(Rational(-1));
    for (const auto& [comp, coef] : rest.terms()) acc += stuffle_asymptotic(comp).scaled(-coef);
    return acc.scaled(Rational(1, j));
}

RegValue stuffle_regularize(const Composition& c) {
    return RegValue{stuffle_asymptotic(c).constant_term(), RegValue::Tag::StuffleReg};
}

LinComb<Composition> compare_regularizations(const Composition& c) {
    // The word of li_to_i(c) decodes back to c, so its shuffle-regularized
    // value is already in Li normalization; no extra sign.
    auto [sign, sym] = li_to_i(c);
    (void)sign;
    LinComb<Composition> sh = shuffle_asymptotic(symbol_word(sym)).constant_term();
    LinComb<Composition> st = stuffle_regularize(c).value;
    return st - sh;
}

bool generating_regularization_check(int m, int trunc, std::string* report) {
    if (m < 1 || trunc < 1) throw std::invalid_argument("generating_regularization_check: bad size");
    std::vector<Argument> atoms;
    for (int i = 0; i < m; ++i) atoms.push_back(Argument::atom("a" + std::to_string(i + 1)));

    // Index tuples (n0; n1..nm), n0 >= 0, ni >= 1, n0 + sum(ni-1) <= trunc.
    // LHS coefficient: head extraction of 0^{n0} a1 0^{n1-1} ... am 0^{nm-1},
    // as a polynomial in X = log(a_end) via H = X - L, constant term in L.
    // RHS coefficient: sum_j X^j/j! [t0^{n0-j}] prod (ti - t0)^{ki-1} words.
    using Key = std::vector<int>;  // (n0, n1..nm)
    using XPoly = std::map<int, LinComb<Word>>;
    std::map<Key, XPoly> lhs, rhs;

    std::vector<int> n(m + 1);
    // Enumerate n over the truncation box.
    std::vector<int> stack;
    auto add_lhs = [&](const Key& key) {
        Word w(key[0], Argument::zero());
        for (int i = 1; i <= m; ++i) {
            w.push_back(atoms[i - 1]);
            for (int j = 1; j < key[i]; ++j) w.push_back(Argument::zero());
        }
        auto parts = shuffle_extract(w);
        XPoly xp;
        for (const auto& [ht, comb] : parts) {
            // H^i with H = X - L: constant term in L is X^i.
            if (ht.second != 0) continue;  // no tail divergence arises here
            auto& slot = xp[ht.first];
            slot += comb;
            if (slot.is_zero()) xp.erase(ht.first);
        }
        if (!xp.empty()) lhs[key] = xp;
    };

    std::function<void(int, int)> enum_n = [&](int pos, int used) {
        if (pos == m + 1) {
            Key key(n.begin(), n.end());
            add_lhs(key);
            return;
        }
        int lo = (pos == 0) ? 0 : 1;
        for (int v = lo; used + (v - lo) <= trunc; ++v) {
            n[pos] = v;
            enum_n(pos + 1, used + (v - lo));
        }
    };
    enum_n(0, 0);

    // RHS: enumerate k-tuples (k1..km), ki >= 1, sum(ki-1) <= trunc.
    std::vector<int> k(m);
    std::function<void(int, int)> enum_k = [&](int pos, int used) {
        if (pos == m) {
            Word w;
            for (int i = 0; i < m; ++i) {
                w.push_back(atoms[i]);
                for (int j = 1; j < k[i]; ++j) w.push_back(Argument::zero());
            }
            // prod_i (t_i - t0)^{k_i - 1}: expand into t0-power times t-powers.
            // Collect per (e0, e1..em) with ei = power of ti.
            std::map<Key, Rational> expansion;  // key = (e0, e1..em)
            expansion[Key(m + 1, 0)] = Rational(1);
            for (int i = 0; i < m; ++i) {
                std::map<Key, Rational> next;
                for (const auto& [key, coef] : expansion) {
                    for (int b = 0; b <= k[i] - 1; ++b) {
                        // choose b factors of (-t0)
                        Key nk = key;
                        nk[0] += b;
                        nk[i + 1] += k[i] - 1 - b;
                        Rational c = coef * Rational(mpz_class(binomial_z(k[i] - 1, b)));
                        if (b % 2 == 1) c = -c;
                        auto& slot = next[nk];
                        slot += c;
                        if (slot.is_zero()) next.erase(nk);
                    }
                }
                expansion = std::move(next);
            }
            for (const auto& [key, coef] : expansion) {
                for (int j = 0; key[0] + j <= trunc; ++j) {
                    // e^{t0 X} contributes X^j/j! t0^j.
                    Key full(m + 1);
                    full[0] = key[0] + j;
                    bool ok = true;
                    int total = full[0];
                    for (int i = 1; i <= m; ++i) {
                        full[i] = key[i] + 1;  // ni - 1 = power of ti
                        total += key[i];
                        if (total > trunc) { ok = false; break; }
                    }
                    if (!ok) continue;
                    Rational c = coef / Rational(mpz_class(factorial_z(j)));
                    auto& xp = rhs[full];
                    auto& slot = xp[j];
                    slot.add(w, c);
                    if (slot.is_zero()) xp.erase(j);
                    if (xp.empty()) rhs.erase(full);
                }
            }
            return;
        }
        for (int v = 1; used + (v - 1) <= trunc; ++v) {
            k[pos] = v;
            enum_k(pos + 1, used + (v - 1));
        }
    };
    enum_k(0, 0);

    bool ok = true;
    std::ostringstream rep;
    for (const auto& [key, xp] : lhs) {
        auto it = rhs.find(key);
        const XPoly empty;
        const XPoly& other = (it == rhs.end()) ? empty : it->second;
        if (xp != other) {
            ok = false;
            rep << "mismatch at n = (";
            for (std::size_t i = 0; i < key.size(); ++i) rep << (i ? "," : "") << key[i];
            rep << ")\n";
        }
    }
    for (const auto& [key, xp] : rhs) {
        if (!lhs.count(key) && !xp.empty()) {
            ok = false;
            rep << "rhs-only coefficient\n";
        }
    }
    if (report) *report = rep.str();
    return ok;
}

}  // namespace mzv
