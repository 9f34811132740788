#include "mzv/hopf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mzv {

std::string SymMonomial::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "*";
        s += factors[i].str();
    }
    return s;
}

std::string tensor_str(const TensorComb& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    for (const auto& [k, c] : t.terms())
        os << c.pretty() << " * [" << k.left.str() << " | " << k.right.str() << "]\n";
    return os.str();
}

GradedElement mul(const GradedElement& a, const GradedElement& b) {
    GradedElement r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            SymMonomial m = ma;
            m.factors.insert(m.factors.end(), mb.factors.begin(), mb.factors.end());
            m.normalize();
            r.add(m, ca * cb);
        }
    return r;
}

TensorComb tensor_mul(const TensorComb& a, const TensorComb& b) {
    TensorComb r;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            TensorPair p;
            p.left = pa.left;
            p.left.factors.insert(p.left.factors.end(), pb.left.factors.begin(),
                                  pb.left.factors.end());
            p.left.normalize();
            p.right = pa.right;
            p.right.factors.insert(p.right.factors.end(), pb.right.factors.begin(),
                                   pb.right.factors.end());
            p.right.normalize();
            r.add(p, ca * cb);
        }
    return r;
}

GradedElement log_symbol(const Argument& a) {
    GradedElement r;
    if (a.is_zero()) throw std::invalid_argument("log_symbol: log of zero");
    if (a.log_is_torsion()) return r;
    if (a.kind() == Argument::Kind::Formal) {
        for (const auto& [name, e] : a.exponents()) {
            ISymbol l{Argument::zero(), {Argument::zero()}, Argument::atom(name)};
            r.add(SymMonomial::single(l), Rational(e));
        }
        return r;
    }
    ISymbol l{Argument::zero(), {Argument::zero()}, a};
    r.add(SymMonomial::single(l), Rational(1));
    return r;
}

namespace {

// x^n / n! for a weight-homogeneous element (used for log powers).
GradedElement pow_over_factorial(const GradedElement& x, int n) {
    GradedElement acc(SymMonomial::unit());
    for (int i = 1; i <= n; ++i) acc = mul(acc, x).scaled(Rational(1, i));
    return acc;
}

bool is_standard_shape(const ISymbol& s) {
    return s.a0.is_zero() && !s.middle.empty() && !s.middle.front().is_zero() &&
           !s.a_end.is_zero();
}

GradedElement reduce_rec(const ISymbol& s);

GradedElement reduce_lincomb(const LinComb<ISymbol>& l) {
    GradedElement r;
    for (const auto& [k, c] : l.terms()) {
        if (k.is_unit())
            r.add(SymMonomial::unit(), c);
        else
            r += reduce_rec(k).scaled(c);
    }
    return r;
}

// Duval's algorithm: the factorization of a word into non-increasing
// Lyndon words (letter order = Argument ordering, ZeroPoint smallest).
std::vector<Word> lyndon_factorize(const Word& w) {
    std::vector<Word> out;
    std::size_t i = 0, n = w.size();
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && !(w[j] < w[k])) {
            if (w[k] < w[j])
                k = i;
            else
                ++k;
            ++j;
        }
        while (i <= k) {
            out.push_back(Word(w.begin() + i, w.begin() + i + (j - k)));
            i += j - k;
        }
    }
    return out;
}

// A based symbol I(0; w; e) keyed by a Lyndon word, with the weight-1
// degenerate letters replaced by their regularized log values.
GradedElement lyndon_key(const Word& w, const Argument& e) {
    if (w.size() == 1) {
        const Argument& q = w.front();
        if (q.is_zero()) return log_symbol(e);        // I(0;0;e) = log e
        if (q == e) return -log_symbol(e);            // I(0;e;e) = -log e
    }
    return GradedElement(SymMonomial::single(ISymbol{Argument::zero(), w, e}));
}

// Express I(0; w; e) in the Lyndon basis of the shuffle algebra: the
// shuffle product of the Lyndon factors equals c0 * w plus lexicographically
// smaller words, so the decomposition is triangular.
GradedElement lyndon_reduce(const Word& w, const Argument& e, std::map<Word, GradedElement>& memo) {
    if (w.empty()) return GradedElement(SymMonomial::unit());
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::vector<Word> factors = lyndon_factorize(w);
    GradedElement result;
    if (factors.size() == 1) {
        result = lyndon_key(w, e);
    } else {
        LinComb<Word> prod(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i) prod = shuffle(prod, LinComb<Word>(factors[i]));
        Rational c0 = prod.coeff(w);
        GradedElement acc(SymMonomial::unit());
        for (const auto& f : factors) acc = mul(acc, lyndon_key(f, e));
        for (const auto& [v, c] : prod.terms()) {
            if (v == w) continue;
            if (!(v < w)) throw std::logic_error("lyndon_reduce: non-triangular shuffle expansion");
            acc += lyndon_reduce(v, e, memo).scaled(-c);
        }
        result = acc.scaled(c0.inverse());
    }
    memo.emplace(w, result);
    return result;
}

GradedElement reduce_rec(const ISymbol& s) {
    LinComb<ISymbol> canon = canonicalize(s);
    if (canon.is_zero()) return {};
    if (canon.terms().begin()->first.is_unit()) return GradedElement(SymMonomial::unit());

    if (!s.a0.is_zero()) {
        if (s.a_end.is_zero()) {
            // reverse into a based-at-zero symbol
            return reduce_lincomb(reverse(s));
        }
        // compose the path through 0
        GradedElement out;
        for (const auto& [l, r] : path_compose(s, Argument::zero()))
            out += mul(reduce_lincomb(canonicalize(l)), reduce_lincomb(canonicalize(r)));
        return out;
    }

    std::map<Word, GradedElement> memo;
    return lyndon_reduce(s.middle, s.a_end, memo);
}

}  // namespace

GradedElement reduce_symbol(const ISymbol& s) { return reduce_rec(s); }

namespace {

// Difference log l(u - v) when it can be formed in the argument universe;
// an endpoint ZeroPoint stands for the regularized value 0. Returns false
// when the difference is not representable (distinct formal atoms).
bool diff_log(const Argument& u, const Argument& v, GradedElement& out) {
    if (v.is_zero()) {
        out = u.is_zero() ? GradedElement{} : log_symbol(u);
        return true;
    }
    if (u.is_zero()) {
        // l(-v) = l(v) + l(-1), and l(-1) is torsion
        out = log_symbol(v);
        return true;
    }
    if (u.kind() == Argument::Kind::Exact && v.kind() == Argument::Kind::Exact &&
        u.im().is_zero() && v.im().is_zero()) {
        Rational d = u.re() - v.re();
        out = d.is_zero() ? GradedElement{} : log_symbol(Argument::exact(d));
        return true;
    }
    return false;
}

// The coproduct-mode reduction: only rewrites whose targets are primitive
// (weight-1 logs) or group-like log powers, so both modes stay exactly
// coassociative. Everything else is kept verbatim.
GradedElement weight_safe_reduce(const ISymbol& s) {
    bool all_zero = true;
    for (const auto& l : s.middle)
        if (!l.is_zero()) {
            all_zero = false;
            break;
        }
    if (all_zero) {
        // I(p; 0^j; r) = (l(r) - l(p))^j / j!
        GradedElement diff;
        if (!s.a_end.is_zero()) diff += log_symbol(s.a_end);
        if (!s.a0.is_zero()) diff -= log_symbol(s.a0);
        return pow_over_factorial(diff, s.weight());
    }
    if (s.weight() == 1) {
        const Argument& q = s.middle.front();
        GradedElement val;
        if (q == s.a0 && diff_log(s.a_end, q, val)) return val;
        if (q == s.a_end && diff_log(s.a0, q, val)) return -val;
    }
    return GradedElement(SymMonomial::single(s));
}

}  // namespace

GradedElement to_element(const ISymbol& s, ReduceMode mode) {
    GradedElement r;
    for (const auto& [k, c] : canonicalize(s).terms()) {
        if (k.is_unit())
            r.add(SymMonomial::unit(), c);
        else if (mode == ReduceMode::Reduced)
            r += weight_safe_reduce(k).scaled(c);
        else
            r.add(SymMonomial::single(k), c);
    }
    return r;
}

GradedElement reduce_element(const GradedElement& x, ReduceMode mode) {
    if (mode == ReduceMode::Raw) return x;
    GradedElement r;
    for (const auto& [m, c] : x.terms()) {
        GradedElement acc(SymMonomial::unit());
        for (const auto& f : m.factors) acc = mul(acc, reduce_symbol(f));
        r += acc.scaled(c);
    }
    return r;
}

TensorComb li_normalize(const TensorComb& t) {
    TensorComb out;
    for (const auto& [pair, c] : t.terms()) {
        GradedElement l(SymMonomial::unit()), r(SymMonomial::unit());
        for (const auto& f : pair.left.factors) l = mul(l, reduce_symbol(f));
        for (const auto& f : pair.right.factors) r = mul(r, reduce_symbol(f));
        for (const auto& [lm, lc] : l.terms())
            for (const auto& [rm, rc] : r.terms()) out.add(TensorPair{lm, rm}, c * lc * rc);
    }
    return out;
}

TensorComb coproduct(const ISymbol& s, ReduceMode mode) {
    LinComb<ISymbol> canon = canonicalize(s);
    if (canon.is_zero()) return {};
    if (canon.terms().begin()->first.is_unit()) {
        TensorComb unit;
        unit.add(TensorPair{SymMonomial::unit(), SymMonomial::unit()}, Rational(1));
        return unit;
    }
    if (mode == ReduceMode::Reduced) {
        // Apply the subsequence formula to the weight-safe reduced form so
        // every route lands in the same key basis.
        GradedElement nf = weight_safe_reduce(s);
        bool already = nf.size() == 1 && nf.terms().begin()->second.is_one() &&
                       nf.terms().begin()->first.factors.size() == 1 &&
                       nf.terms().begin()->first.factors[0] == s;
        if (!already) return coproduct(nf, mode);
    }

    const int m = s.weight();
    // letters indexed 1..m, boundary a_0 and a_{m+1}
    auto letter = [&](int i) -> const Argument& {
        if (i == 0) return s.a0;
        if (i == m + 1) return s.a_end;
        return s.middle[i - 1];
    };

    TensorComb out;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::vector<int> idx;
        for (int i = 1; i <= m; ++i)
            if (mask & (1ul << (i - 1))) idx.push_back(i);

        ISymbol left{s.a0, {}, s.a_end};
        for (int i : idx) left.middle.push_back(letter(i));
        GradedElement lhs = to_element(left, mode);
        if (lhs.is_zero()) continue;

        GradedElement rhs(SymMonomial::unit());
        std::vector<int> bounds;
        bounds.push_back(0);
        for (int i : idx) bounds.push_back(i);
        bounds.push_back(m + 1);
        for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
            int lo = bounds[p], hi = bounds[p + 1];
            ISymbol seg{letter(lo), {}, letter(hi)};
            for (int i = lo + 1; i < hi; ++i) seg.middle.push_back(letter(i));
            rhs = mul(rhs, to_element(seg, mode));
            if (rhs.is_zero()) break;
        }
        if (rhs.is_zero()) continue;

        for (const auto& [lm, lc] : lhs.terms())
            for (const auto& [rm, rc] : rhs.terms()) out.add(TensorPair{lm, rm}, lc * rc);
    }
    return out;
}

TensorComb coproduct(const SymMonomial& mono, ReduceMode mode) {
    TensorComb acc;
    acc.add(TensorPair{SymMonomial::unit(), SymMonomial::unit()}, Rational(1));
    for (const auto& f : mono.factors) acc = tensor_mul(acc, coproduct(f, mode));
    return acc;
}

TensorComb coproduct(const GradedElement& x, ReduceMode mode) {
    TensorComb r;
    for (const auto& [m, c] : x.terms()) r += coproduct(m, mode).scaled(c);
    return r;
}

TensorComb restricted_coproduct(const ISymbol& s, ReduceMode mode) {
    return restricted_coproduct(to_element(s, mode), mode);
}

TensorComb restricted_coproduct(const GradedElement& x, ReduceMode mode) {
    TensorComb full = coproduct(x, mode);
    for (const auto& [m, c] : x.terms()) {
        full.add(TensorPair{m, SymMonomial::unit()}, -c);
        full.add(TensorPair{SymMonomial::unit(), m}, -c);
    }
    // the scalar part of x contributes 1 (x) 1 twice above but only once in Delta
    Rational scalar = counit(x);
    if (!scalar.is_zero())
        full.add(TensorPair{SymMonomial::unit(), SymMonomial::unit()}, scalar);
    return full;
}

Rational counit(const GradedElement& x) { return x.coeff(SymMonomial::unit()); }

GradedElement graded_part(const GradedElement& x, int k) {
    GradedElement r;
    for (const auto& [m, c] : x.terms())
        if (m.weight() == k) r.add(m, c);
    return r;
}

namespace {

GradedElement antipode_monomial(const SymMonomial& m, ReduceMode mode,
                                std::map<SymMonomial, GradedElement>& memo) {
    if (m.is_unit()) return GradedElement(SymMonomial::unit());
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    // 0 = sum S(m_(1)) m_(2) over Delta(m); the (w,0) term is m itself.
    GradedElement acc;
    TensorComb cp = coproduct(m, mode);
    const int w = m.weight();
    for (const auto& [pair, c] : cp.terms()) {
        int lw = pair.left.weight();
        if (lw == w) continue;  // handled as the unknown S(m): those terms are m (x) scalar
        GradedElement sl = antipode_monomial(pair.left, mode, memo);
        acc += mul(sl, GradedElement(pair.right)).scaled(c);
    }
    // Terms with left weight w: left must be m itself times scalar right; in a
    // connected graded bialgebra that coefficient is 1, so S(m) = -acc.
    GradedElement result = -acc;
    memo.emplace(m, result);
    return result;
}

}  // namespace

GradedElement antipode(const GradedElement& x, ReduceMode mode) {
    std::map<SymMonomial, GradedElement> memo;
    GradedElement r;
    for (const auto& [m, c] : x.terms()) r += antipode_monomial(m, mode, memo).scaled(c);
    return r;
}

Wedge2 wedge_antisymmetrize(const TensorComb& t) {
    Wedge2 r;
    for (const auto& [pair, c] : t.terms()) {
        if (pair.left.factors.size() != 1 || pair.right.factors.size() != 1) continue;
        const ISymbol& a = pair.left.factors[0];
        const ISymbol& b = pair.right.factors[0];
        if (a == b) continue;
        if (a < b)
            r.add(WedgePair{a, b}, c);
        else
            r.add(WedgePair{b, a}, -c);
    }
    return r;
}

Wedge2 cobracket(const ISymbol& s, ReduceMode mode) {
    return wedge_antisymmetrize(restricted_coproduct(s, mode));
}

namespace {

void wedge3_add(Wedge3& out, const ISymbol& a, const ISymbol& b, const ISymbol& c,
                const Rational& coef) {
    // sort with sign
    std::vector<const ISymbol*> v{&a, &b, &c};
    int sign = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2 - i; ++j)
            if (*v[j + 1] < *v[j]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
    if (*v[0] == *v[1] || *v[1] == *v[2]) return;
    out.add(WedgeTriple{*v[0], *v[1], *v[2]}, sign > 0 ? coef : -coef);
}

}  // namespace

Wedge3 co_jacobi(const ISymbol& s, ReduceMode mode) {
    Wedge3 out;
    Wedge2 d = cobracket(s, mode);
    for (const auto& [w, c] : d.terms()) {
        Wedge2 da = cobracket(w.a, mode);
        Wedge2 db = cobracket(w.b, mode);
        for (const auto& [wa, ca] : da.terms()) wedge3_add(out, wa.a, wa.b, w.b, c * ca);
        for (const auto& [wb, cb] : db.terms()) wedge3_add(out, wb.a, wb.b, w.a, -(c * cb));
    }
    return out;
}

int depth_filtration(const GradedElement& x) {
    int d = 0;
    for (const auto& [m, c] : x.terms()) d = std::max(d, m.max_depth());
    return d;
}

// --- level-N generating-series checks --------------------------------

HopfCheckReport grouplike_log_series_check(int nmax) {
    HopfCheckReport rep;
    Argument a = Argument::atom("a");
    for (int n = 1; n <= nmax; ++n) {
        ISymbol an{Argument::zero(), std::vector<Argument>(n, Argument::zero()), a};
        TensorComb lhs = coproduct(an, ReduceMode::Reduced);
        TensorComb rhs;
        GradedElement la = log_symbol(a);
        for (int k = 0; k <= n; ++k) {
            GradedElement left = pow_over_factorial(la, k);
            GradedElement right = pow_over_factorial(la, n - k);
            for (const auto& [lm, lc] : left.terms())
                for (const auto& [rm, rc] : right.terms())
                    rhs.add(TensorPair{lm, rm}, lc * rc);
        }
        ++rep.cases_checked;
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.detail += "group-likeness fails at n=" + std::to_string(n) + "\n";
        }
    }
    return rep;
}

HopfCheckReport depth1_coproduct_check(long N, int nmax) {
    HopfCheckReport rep;
    for (long k = 0; k < N; ++k) {
        Argument a = Argument::root(k, N);
        for (int n = 1; n <= nmax; ++n) {
            ISymbol s = make_i_symbol({n}, {a}, Argument::one(N));
            TensorComb dp = li_normalize(restricted_coproduct(s, ReduceMode::Reduced));
            ++rep.cases_checked;
            if (!dp.is_zero()) {
                rep.ok = false;
                rep.detail += "depth-1 collapse fails at k=" + std::to_string(k) +
                              " n=" + std::to_string(n) + "\n";
            }
        }
    }
    return rep;
}

namespace {

// Coefficient of t1^{e1} t2^{e2} in the three-term depth-2 formula
//   I(a1:1|t1) (x) I(a2:1|t2-t1) - I(a1:1|t2) (x) I(a2:a1|t2-t1)
//   + I(a2:1|t2) (x) I(a1:a2|t1)
// with I(a:b|s) = sum_{k>=1} I(0; a 0^{k-1}; b) s^{k-1}.
TensorComb ur107b_coefficient(const Argument& a1, const Argument& a2, long N, int e1, int e2) {
    Argument one = Argument::one(N);
    auto ik = [&](const Argument& a, const Argument& b, int k) {
        return reduce_symbol(make_i_symbol({k}, {a}, b));
    };
    TensorComb out;
    auto emit = [&](const GradedElement& l, const GradedElement& r, const Rational& c) {
        for (const auto& [lm, lc] : l.terms())
            for (const auto& [rm, rc] : r.terms()) out.add(TensorPair{lm, rm}, lc * rc * c);
    };
    // term 1: left t1^{k1-1}, right (t2-t1)^{k2-1}
    // (t2-t1)^{k2-1} -> sum_j C(k2-1,j) t2^{k2-1-j} (-t1)^j
    for (int k2 = 1; k2 <= e1 + e2 + 1; ++k2) {
        for (int j = 0; j <= k2 - 1; ++j) {
            // t1-degree j from the right factor, so k1 - 1 = e1 - j
            int k1m1 = e1 - j;
            if (k1m1 < 0) continue;
            if (k2 - 1 - j != e2) continue;
            Rational c = Rational(mpz_class(binomial_z(k2 - 1, j)));
            if (j % 2 == 1) c = -c;
            emit(ik(a1, one, k1m1 + 1), ik(a2, one, k2), c);
        }
    }
    // term 2: -I(a1:1|t2) (x) I(a2:a1|t2-t1): left t2^{k1-1}, right (t2-t1)^{k2-1}
    for (int k2 = 1; k2 <= e1 + e2 + 1; ++k2) {
        for (int j = 0; j <= k2 - 1; ++j) {
            if (j != e1) continue;  // all t1 powers come from (-t1)^j
            int k1m1 = e2 - (k2 - 1 - j);
            if (k1m1 < 0) continue;
            Rational c = Rational(mpz_class(binomial_z(k2 - 1, j)));
            if (j % 2 == 0) c = -c;  // overall minus times (-1)^j
            emit(ik(a1, one, k1m1 + 1), ik(a2, a1, k2), c);
        }
    }
    // term 3: +I(a2:1|t2) (x) I(a1:a2|t1)
    {
        int k1 = e2 + 1, k2 = e1 + 1;
        emit(ik(a2, one, k1), ik(a1, a2, k2), Rational(1));
    }
    return out;
}

}  // namespace

HopfCheckReport depth2_coproduct_check(long N, int wmax) {
    HopfCheckReport rep;
    for (long k1 = 0; k1 < N; ++k1)
        for (long k2 = 0; k2 < N; ++k2) {
            Argument a1 = Argument::root(k1, N), a2 = Argument::root(k2, N);
            for (int n1 = 1; n1 <= wmax - 1; ++n1)
                for (int n2 = 1; n1 + n2 <= wmax; ++n2) {
                    ISymbol s = make_i_symbol({n1, n2}, {a1, a2}, Argument::one(N));
                    TensorComb lhs =
                        li_normalize(restricted_coproduct(s, ReduceMode::Reduced));
                    TensorComb rhs = ur107b_coefficient(a1, a2, N, n1 - 1, n2 - 1);
                    ++rep.cases_checked;
                    if (!(lhs == rhs)) {
                        rep.ok = false;
                        rep.detail += "depth-2 coproduct mismatch at a1=w" + std::to_string(k1) +
                                      " a2=w" + std::to_string(k2) + " n=(" + std::to_string(n1) +
                                      "," + std::to_string(n2) + ")\n";
                    }
                }
        }
    return rep;
}

HopfCheckReport depth2_cobracket_check(long N, int wmax) {
    HopfCheckReport rep;
    for (long k1 = 0; k1 < N; ++k1)
        for (long k2 = 0; k2 < N; ++k2) {
            Argument a1 = Argument::root(k1, N), a2 = Argument::root(k2, N);
            for (int n1 = 1; n1 <= wmax - 1; ++n1)
                for (int n2 = 1; n1 + n2 <= wmax; ++n2) {
                    ISymbol s = make_i_symbol({n1, n2}, {a1, a2}, Argument::one(N));
                    Wedge2 lhs =
                        wedge_antisymmetrize(li_normalize(restricted_coproduct(s, ReduceMode::Reduced)));
                    Wedge2 rhs = wedge_antisymmetrize(ur107b_coefficient(a1, a2, N, n1 - 1, n2 - 1));
                    ++rep.cases_checked;
                    if (!(lhs == rhs)) {
                        rep.ok = false;
                        rep.detail += "depth-2 cobracket mismatch at (" + std::to_string(k1) + "," +
                                      std::to_string(k2) + "," + std::to_string(n1) + "," +
                                      std::to_string(n2) + ")\n";
                    }
                }
        }
    return rep;
}

}  // namespace mzv
