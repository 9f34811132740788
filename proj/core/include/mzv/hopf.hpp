#pragma once

// The graded Hopf structure on I-symbols: the subsequence-sum coproduct,
// restricted coproduct, inductive antipode, cobracket on indecomposables
// and the depth filtration.
//
// Two operating modes:
//   Raw      - the coproduct formula with only the basic canonicalization
//              (unit and equal-endpoint rules); symbols keep arbitrary
//              endpoints. This is the generic multiple-logarithm algebra.
//   Reduced  - every symbol is rewritten to the based-at-zero normal form:
//              path composition through 0, reversal, extraction of leading
//              dt/t letters into log powers, and weight-1 logs with
//              torsion arguments (roots of unity, +-1, +-i) killed. This
//              is the multiple-polylogarithm quotient where the level-N
//              statements live.

#include "mzv/lincomb.hpp"
#include "mzv/symbols.hpp"

#include <string>
#include <vector>

namespace mzv {

enum class ReduceMode { Raw, Reduced };

// Commutative monomial: sorted multiset of symbols. The empty monomial
// is the unit.
struct SymMonomial {
    std::vector<ISymbol> factors;

    static SymMonomial unit() { return {}; }
    static SymMonomial single(const ISymbol& s) { return SymMonomial{{s}}; }

    bool is_unit() const { return factors.empty(); }
    int weight() const {
        int w = 0;
        for (const auto& f : factors) w += f.weight();
        return w;
    }
    int max_depth() const {
        int d = 0;
        for (const auto& f : factors) d = std::max(d, f.depth());
        return d;
    }
    void normalize() { std::sort(factors.begin(), factors.end()); }

    friend bool operator==(const SymMonomial& a, const SymMonomial& b) {
        return a.factors == b.factors;
    }
    friend bool operator<(const SymMonomial& a, const SymMonomial& b) {
        return a.factors < b.factors;
    }
    std::string str() const;
};

using GradedElement = LinComb<SymMonomial>;

struct TensorPair {
    SymMonomial left, right;
    friend bool operator==(const TensorPair& a, const TensorPair& b) {
        return a.left == b.left && a.right == b.right;
    }
    friend bool operator<(const TensorPair& a, const TensorPair& b) {
        if (!(a.left == b.left)) return a.left < b.left;
        return a.right < b.right;
    }
};

using TensorComb = LinComb<TensorPair>;

std::string tensor_str(const TensorComb& t);

GradedElement mul(const GradedElement& a, const GradedElement& b);
TensorComb tensor_mul(const TensorComb& a, const TensorComb& b);

// The log symbol log(a) = I(0;0;a), split over formal atom exponents,
// zero for torsion arguments.
GradedElement log_symbol(const Argument& a);

// Full based-at-zero normal form of a symbol: reversal, path composition
// through 0, leading-zero extraction into log powers, trailing-endpoint
// letter extraction. Used to express outputs in the Li basis; the
// coproduct itself uses only the weight-safe part of these rewrites.
GradedElement reduce_symbol(const ISymbol& s);
GradedElement to_element(const ISymbol& s, ReduceMode mode);
GradedElement reduce_element(const GradedElement& x, ReduceMode mode);
// Apply reduce_symbol to every tensor factor.
TensorComb li_normalize(const TensorComb& t);

// The subsequence-sum coproduct of one symbol, extended multiplicatively
// and linearly to monomials and elements.
TensorComb coproduct(const ISymbol& s, ReduceMode mode = ReduceMode::Reduced);
TensorComb coproduct(const SymMonomial& m, ReduceMode mode = ReduceMode::Reduced);
TensorComb coproduct(const GradedElement& x, ReduceMode mode = ReduceMode::Reduced);

// Delta'(x) = Delta(x) - x(x)1 - 1(x)x.
TensorComb restricted_coproduct(const ISymbol& s, ReduceMode mode = ReduceMode::Reduced);
TensorComb restricted_coproduct(const GradedElement& x, ReduceMode mode = ReduceMode::Reduced);

// Counit: coefficient of the unit monomial.
Rational counit(const GradedElement& x);
// Weight-k component.
GradedElement graded_part(const GradedElement& x, int k);

// Inductive antipode mu(S(x)id)Delta = unit o counit, solved by weight.
GradedElement antipode(const GradedElement& x, ReduceMode mode = ReduceMode::Reduced);

// Cobracket delta = (pi (x) pi) Delta' mapped into Lambda^2: keys are
// ordered pairs a < b, a wedge b = -(b wedge a), a wedge a = 0. pi kills
// the unit and every product of two or more symbols.
struct WedgePair {
    ISymbol a, b;  // a < b
    friend bool operator==(const WedgePair& x, const WedgePair& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const WedgePair& x, const WedgePair& y) {
        if (!(x.a == y.a)) return x.a < y.a;
        return x.b < y.b;
    }
};
using Wedge2 = LinComb<WedgePair>;

struct WedgeTriple {
    ISymbol a, b, c;  // a < b < c
    friend bool operator==(const WedgeTriple& x, const WedgeTriple& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const WedgeTriple& x, const WedgeTriple& y) {
        if (!(x.a == y.a)) return x.a < y.a;
        if (!(x.b == y.b)) return x.b < y.b;
        return x.c < y.c;
    }
};
using Wedge3 = LinComb<WedgeTriple>;

Wedge2 wedge_antisymmetrize(const TensorComb& t);
Wedge2 cobracket(const ISymbol& s, ReduceMode mode = ReduceMode::Reduced);

// (delta wedge id - id wedge delta) applied after delta; zero in a Lie
// coalgebra (co-Jacobi).
Wedge3 co_jacobi(const ISymbol& s, ReduceMode mode = ReduceMode::Reduced);

// Depth filtration: max over monomials of the max symbol depth.
int depth_filtration(const GradedElement& x);

// --- level-N generating-series checks -------------------------------

struct HopfCheckReport {
    bool ok = true;
    int cases_checked = 0;
    std::string detail;
};

// Delta(a^t) = a^t (x) a^t coefficientwise: Delta I(0;0^n;a) =
// sum_k I(0;0^k;a) (x) I(0;0^{n-k};a), over a formal atom, n <= nmax.
HopfCheckReport grouplike_log_series_check(int nmax);

// Depth-1 collapse at level N: Delta' of I_n(a:1) vanishes mod torsion.
HopfCheckReport depth1_coproduct_check(long N, int nmax);

// Depth-2: machine coproduct of I_{n1,n2}(a1:a2:1) against the three-term
// generating-series formula, coefficientwise, at level N, weights <= wmax.
HopfCheckReport depth2_coproduct_check(long N, int wmax);

// Same comparison for the cobracket (antisymmetrized three-term formula).
HopfCheckReport depth2_cobracket_check(long N, int wmax);

}  // namespace mzv
