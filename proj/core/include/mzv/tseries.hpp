#pragma once

// Truncated generating series in named t-variables with LinComb
// coefficients, enough to verify the generating-function form of the
// second shuffle theorem at coefficient level, plus the partial-fraction
// identities behind the inversion formula.

#include "mzv/lincomb.hpp"
#include "mzv/multipoly.hpp"
#include "mzv/words.hpp"

#include <string>
#include <vector>

namespace mzv {

// Exponent vector over a fixed number of t-variables.
using TExp = std::vector<int>;

template <typename K>
class TSeries {
public:
    TSeries(int nvars, int trunc) : nvars_(nvars), trunc_(trunc) {}

    int nvars() const { return nvars_; }
    int trunc() const { return trunc_; }
    const std::map<TExp, LinComb<K>>& terms() const { return terms_; }

    void add(const TExp& e, const LinComb<K>& c) {
        if (c.is_zero()) return;
        int tot = 0;
        for (int x : e) tot += x;
        if (tot > trunc_) return;
        auto& slot = terms_[e];
        slot += c;
        if (slot.is_zero()) terms_.erase(e);
    }

    TSeries& operator+=(const TSeries& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    TSeries operator-() const {
        TSeries r(nvars_, trunc_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend bool operator==(const TSeries& a, const TSeries& b) { return a.terms_ == b.terms_; }

private:
    int nvars_, trunc_;
    std::map<TExp, LinComb<K>> terms_;
};

// Product of two word-coefficient series with coefficientwise shuffle.
TSeries<Word> mul_shuffle(const TSeries<Word>& a, const TSeries<Word>& b);
// Product of two composition-coefficient series with coefficientwise stuffle.
TSeries<Composition> mul_stuffle(const TSeries<Composition>& a, const TSeries<Composition>& b);

// The generating series I^![a_1..a_m | t_{idx(1)},...,t_{idx(m)}] =
// sum over n_j >= 1 of the word a_1 0^{n_1-1} ... a_m 0^{n_m-1} times
// t_{idx(1)}^{n_1-1} (t_{idx(1)}+t_{idx(2)})^{n_2-1} ... truncated at total
// degree trunc over nvars named variables.
TSeries<Word> ibang_series(const std::vector<Argument>& args, const std::vector<int>& tindex,
                           int nvars, int trunc);

// The generating series Li(x_1..x_m | t_{idx}) with composition
// coefficients: plain powers t_{idx(j)}^{n_j-1}.
TSeries<Composition> li_series(const std::vector<Argument>& args, const std::vector<int>& tindex,
                               int nvars, int trunc);

struct CheckReport {
    bool ok = true;
    int coefficients_checked = 0;
    std::string detail;
};

// Coefficient-level verification of
//   I^![a_1..a_k | t_1..t_k] * I^![a_{k+1}..a_{k+l} | ...] =
//   sum over shuffles sigma of I^![a_sigma | t_sigma]
// with the word-shuffle product as the multiplication on the left.
CheckReport second_shuffle_check(int k, int l, int trunc);

// The partial-fraction identities in 2m variables k_i, t_i:
//   1/prod(k_i - t_i) = sum_j 1/((k_j - t_j) prod_{i != j} (k_ij - t_ij))
//   sum_j 1/prod_{i != j}(k_ij - t_ij) = 0
// verified by clearing denominators symbolically.
CheckReport partial_fraction_check(int m);

// Coefficient-level stuffle: products of Li generating series agree with
// direct stuffle of coefficient compositions up to truncation.
CheckReport first_shuffle_series_check(int m, int n, int trunc);

}  // namespace mzv
