#include "mzv/tseries.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace mzv {

namespace {

int total(const TExp& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Scalar truncated polynomials over exponent vectors.
using TPoly = std::map<TExp, Rational>;

TPoly tp_one(int nvars) { return TPoly{{TExp(nvars, 0), Rational(1)}}; }

TPoly tp_mul(const TPoly& a, const TPoly& b, int trunc) {
    TPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            TExp e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            if (total(e) > trunc) continue;
            auto& slot = r[e];
            slot += ca * cb;
            if (slot.is_zero()) r.erase(e);
        }
    return r;
}

}  // namespace

TSeries<Word> mul_shuffle(const TSeries<Word>& a, const TSeries<Word>& b) {
    TSeries<Word> r(a.nvars(), a.trunc());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            TExp e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            if (total(e) > a.trunc()) continue;
            r.add(e, shuffle(ca, cb));
        }
    return r;
}

TSeries<Composition> mul_stuffle(const TSeries<Composition>& a, const TSeries<Composition>& b) {
    TSeries<Composition> r(a.nvars(), a.trunc());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            TExp e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            if (total(e) > a.trunc()) continue;
            r.add(e, stuffle(ca, cb));
        }
    return r;
}

TSeries<Word> ibang_series(const std::vector<Argument>& args, const std::vector<int>& tindex,
                           int nvars, int trunc) {
    if (args.size() != tindex.size()) throw std::invalid_argument("ibang_series: arity mismatch");
    TSeries<Word> out(nvars, trunc);
    const int m = static_cast<int>(args.size());
    // Partial-sum variables s_j = t_{idx(1)} + ... + t_{idx(j)}.
    std::vector<TPoly> partial;
    for (int j = 0; j < m; ++j) {
        TPoly s;
        for (int i = 0; i <= j; ++i) {
            TExp e(nvars, 0);
            e[tindex[i]] += 1;
            auto& slot = s[e];
            slot += Rational(1);
        }
        partial.push_back(s);
    }
    std::function<void(int, int, TPoly, Word)> rec = [&](int j, int used, TPoly poly, Word w) {
        if (j == m) {
            for (const auto& [e, c] : poly) out.add(e, LinComb<Word>(w).scaled(c));
            return;
        }
        Word base = w;
        base.push_back(args[j]);
        TPoly cur = poly;
        for (int nj = 1; used + (nj - 1) <= trunc; ++nj) {
            rec(j + 1, used + (nj - 1), cur, base);
            cur = tp_mul(cur, partial[j], trunc);
            if (cur.empty()) break;
            base.push_back(Argument::zero());
        }
    };
    rec(0, 0, tp_one(nvars), Word{});
    return out;
}

TSeries<Composition> li_series(const std::vector<Argument>& args, const std::vector<int>& tindex,
                               int nvars, int trunc) {
    if (args.size() != tindex.size()) throw std::invalid_argument("li_series: arity mismatch");
    TSeries<Composition> out(nvars, trunc);
    const int m = static_cast<int>(args.size());
    std::vector<int> n(m, 1);
    std::function<void(int, int)> rec = [&](int j, int used) {
        if (j == m) {
            TExp e(nvars, 0);
            Composition c;
            for (int i = 0; i < m; ++i) {
                e[tindex[i]] += n[i] - 1;
                c.push_back(CompEntry{n[i], args[i]});
            }
            out.add(e, LinComb<Composition>(c));
            return;
        }
        for (n[j] = 1; used + (n[j] - 1) <= trunc; ++n[j]) rec(j + 1, used + (n[j] - 1));
        n[j] = 1;
    };
    rec(0, 0);
    return out;
}

CheckReport second_shuffle_check(int k, int l, int trunc) {
    if (k < 0 || l < 0 || k + l > 4 || trunc > 6)
        throw std::invalid_argument("second_shuffle_check: desk-scale limits are k+l <= 4, trunc <= 6");
    if (trunc < 1) throw std::invalid_argument("second_shuffle_check: truncation too small");
    CheckReport rep;
    const int m = k + l;
    std::vector<Argument> atoms;
    for (int i = 0; i < m; ++i) atoms.push_back(Argument::atom("a" + std::to_string(i + 1)));

    std::vector<Argument> left(atoms.begin(), atoms.begin() + k);
    std::vector<Argument> right(atoms.begin() + k, atoms.end());
    std::vector<int> lidx(k), ridx(l);
    for (int i = 0; i < k; ++i) lidx[i] = i;
    for (int i = 0; i < l; ++i) ridx[i] = k + i;

    TSeries<Word> lhs = mul_shuffle(ibang_series(left, lidx, std::max(m, 1), trunc),
                                    ibang_series(right, ridx, std::max(m, 1), trunc));

    TSeries<Word> rhs(std::max(m, 1), trunc);
    std::vector<int> sigma;
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == k && j == l) {
            std::vector<Argument> a;
            std::vector<int> idx;
            for (int s : sigma) {
                a.push_back(atoms[s]);
                idx.push_back(s);
            }
            rhs += ibang_series(a, idx, std::max(m, 1), trunc);
            return;
        }
        if (i < k) {
            sigma.push_back(i);
            rec(i + 1, j);
            sigma.pop_back();
        }
        if (j < l) {
            sigma.push_back(k + j);
            rec(i, j + 1);
            sigma.pop_back();
        }
    };
    rec(0, 0);

    rep.ok = (lhs == rhs);
    rep.coefficients_checked = static_cast<int>(lhs.terms().size());
    if (!rep.ok) rep.detail = "coefficient mismatch";
    return rep;
}

CheckReport partial_fraction_check(int m) {
    if (m < 2 || m > 4) throw std::invalid_argument("partial_fraction_check: 2 <= m <= 4");
    CheckReport rep;
    std::vector<MultiPoly> u;  // u_i = k_i - t_i; then k_ij - t_ij = u_i - u_j
    for (int i = 1; i <= m; ++i)
        u.push_back(MultiPoly::var("k" + std::to_string(i)) - MultiPoly::var("t" + std::to_string(i)));

    RationalFn lhs(MultiPoly(Rational(1)));
    for (const auto& ui : u) lhs = lhs * RationalFn(MultiPoly(Rational(1)), ui);
    RationalFn rhs = RationalFn(MultiPoly(Rational(0)));
    for (int j = 0; j < m; ++j) {
        MultiPoly den = u[j];
        for (int i = 0; i < m; ++i)
            if (i != j) den *= u[i] - u[j];
        rhs = rhs + RationalFn(MultiPoly(Rational(1)), den);
    }
    bool first = (lhs == rhs);

    RationalFn sum = RationalFn(MultiPoly(Rational(0)));
    for (int j = 0; j < m; ++j) {
        MultiPoly den(Rational(1));
        for (int i = 0; i < m; ++i)
            if (i != j) den *= u[i] - u[j];
        sum = sum + RationalFn(MultiPoly(Rational(1)), den);
    }
    bool second = sum.is_zero();

    rep.ok = first && second;
    rep.coefficients_checked = 2;
    if (!first) rep.detail += "main partial-fraction identity failed; ";
    if (!second) rep.detail += "vanishing-sum identity failed; ";
    return rep;
}

CheckReport first_shuffle_series_check(int m, int n, int trunc) {
    CheckReport rep;
    std::vector<Argument> xs, ys;
    for (int i = 0; i < m; ++i) xs.push_back(Argument::atom("x" + std::to_string(i + 1)));
    for (int i = 0; i < n; ++i) ys.push_back(Argument::atom("y" + std::to_string(i + 1)));
    std::vector<int> xi(m), yi(n);
    for (int i = 0; i < m; ++i) xi[i] = i;
    for (int i = 0; i < n; ++i) yi[i] = m + i;
    TSeries<Composition> a = li_series(xs, xi, m + n, trunc);
    TSeries<Composition> b = li_series(ys, yi, m + n, trunc);
    TSeries<Composition> prod = mul_stuffle(a, b);
    TSeries<Composition> direct(m + n, trunc);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            TExp e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            direct.add(e, stuffle(ca, cb));
        }
    rep.ok = (prod == direct);
    rep.coefficients_checked = static_cast<int>(prod.terms().size());
    return rep;
}

}  // namespace mzv
