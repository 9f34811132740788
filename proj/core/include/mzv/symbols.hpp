#pragma once

// Framed-object symbols I(a0; a1,...,am; a_end) and the path-algebra
// identities on them: composition at an intermediate point, reversal
// with sign (-1)^m, and the shuffle product at fixed endpoints.
// Canonicalization applies exactly two rewrites: empty middle -> 1 and
// equal endpoints (m >= 1) -> 0. Everything else is stored verbatim.

#include "mzv/argument.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/words.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mzv {

struct ISymbol {
    Argument a0;
    std::vector<Argument> middle;
    Argument a_end;

    int weight() const { return static_cast<int>(middle.size()); }
    // Number of non-zero middle letters.
    int depth() const;
    bool is_unit() const { return middle.empty(); }

    static ISymbol unit() { return ISymbol{Argument::zero(), {}, Argument::zero()}; }

    friend bool operator==(const ISymbol& a, const ISymbol& b) {
        return a.a0 == b.a0 && a.middle == b.middle && a.a_end == b.a_end;
    }
    friend bool operator<(const ISymbol& a, const ISymbol& b) {
        if (!(a.a0 == b.a0)) return a.a0 < b.a0;
        if (a.middle != b.middle) return a.middle < b.middle;
        return a.a_end < b.a_end;
    }

    std::string str() const;
};

// (i) m = 0 -> the unit symbol with coefficient 1;
// (ii) a0 == a_end with m >= 1 -> 0.
LinComb<ISymbol> canonicalize(const ISymbol& s);

// I_{n1..nm}(a1 : ... : am : a_end) laid out with ZeroPoint padding:
// I(0; a1, 0^{n1-1}, ..., am, 0^{nm-1}; a_end).
ISymbol make_i_symbol(const std::vector<int>& exponents, const std::vector<Argument>& args,
                      const Argument& a_end);

// Li_{n1..nm}(x1..xm) = (-1)^m I_{n1..nm}((x1..xm)^{-1}, ..., xm^{-1} : 1).
// Returns the sign (-1)^m and the padded symbol. All x_i must be invertible.
std::pair<int, ISymbol> li_to_i(const Composition& c);

// Inverse conversion on standard-shape symbols (a0 = 0, first middle letter
// nonzero, blocks a_i 0^{n_i-1}, a_end nonzero):
// I_{n...}(a1:...:am:a_end) = (-1)^m Li_{n...}(a2/a1, ..., a_end/am).
std::pair<int, Composition> i_to_li(const ISymbol& s);

// I(a0; a1..am; a_end) viewed with its middle as a word (I-form letters).
Word symbol_word(const ISymbol& s);

// Sum over k of I(a0; a1..ak; mid) * I(mid; a_{k+1}..am; a_end) as a list
// of formal pairs with coefficients (both factors canonicalized lazily by
// the caller).
std::vector<std::pair<ISymbol, ISymbol>> path_compose(const ISymbol& s, const Argument& mid);

// I(a0; a1..am; a_end) -> (-1)^m I(a_end; am..a1; a0).
LinComb<ISymbol> reverse(const ISymbol& s);

// Shuffle of middle sequences at common endpoints; throws on mismatch.
LinComb<ISymbol> shuffle_fixed_endpoints(const ISymbol& s, const ISymbol& t);

}  // namespace mzv
