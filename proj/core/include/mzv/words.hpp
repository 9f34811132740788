#pragma once

// Words in iterated-integral letters and nested-sum compositions, with
// the two products: shuffle of words and quasi-shuffle (stuffle) of
// compositions. Letters are Arguments, the ZERO letter standing for the
// form dt/t and a puncture letter a for dt/(t-a). A word is read in
// integration order from the basepoint, so the MZV word of
// zeta(n1,...,nm) is w1 w0^{n1-1} ... w1 w0^{nm-1}.

#include "mzv/argument.hpp"
#include "mzv/lincomb.hpp"

#include <string>
#include <vector>

namespace mzv {

using Letter = Argument;  // ZeroPoint = the dt/t letter

using Word = std::vector<Letter>;

// One nested-sum index: exponent n >= 1 and argument x.
struct CompEntry {
    int n = 1;
    Argument x;

    friend bool operator==(const CompEntry& a, const CompEntry& b) {
        return a.n == b.n && a.x == b.x;
    }
    friend bool operator<(const CompEntry& a, const CompEntry& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.x < b.x;
    }
};

// Li_{n1,...,nm}(x1,...,xm): entries listed inner index first.
using Composition = std::vector<CompEntry>;

int weight(const Word& w);
int weight(const Composition& c);
int depth(const Composition& c);

// Word over {w0, w1}: starts with w1 and ends with w0 (nonempty case).
bool is_admissible(const Word& w);
// Trailing entry != (1, 1).
bool is_convergent(const Composition& c);

// MZV compositions (all x_i = 1, level 1) <-> Kontsevich words.
Word word_encoding(const Composition& c);
// Inverse on words starting with a puncture letter; requires all
// punctures equal to 1 at level 1.
Composition word_decoding(const Word& w);

std::string word_str(const Word& w);
std::string composition_str(const Composition& c);

// zeta(n1,...,nm) at level 1, entries inner-first.
Composition zeta_composition(const std::vector<int>& exponents);

// All interleavings of u and v preserving internal order, with
// multiplicity; C(|u|+|v|, |u|) terms counted with multiplicity.
LinComb<Word> shuffle(const Word& u, const Word& v);
LinComb<Word> shuffle(const LinComb<Word>& u, const LinComb<Word>& v);

// Quasi-shuffle: interleave or collide on leading entries; a collision
// merges (n1,x1),(n2,x2) -> (n1+n2, x1*x2). Argument products must stay
// inside one universe (throws std::invalid_argument otherwise).
LinComb<Composition> stuffle(const Composition& p, const Composition& q);
LinComb<Composition> stuffle(const LinComb<Composition>& p, const LinComb<Composition>& q);

}  // namespace mzv
