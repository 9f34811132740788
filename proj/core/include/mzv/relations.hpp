#pragma once

// The regularized double-shuffle relation system: generate relation rows
// in a given weight and level, reduce them by exact Gaussian elimination
// over Q, and report dimension bounds, a generating set and closed-form
// solutions.
//
// Rows are linear over monomials in convergent compositions. Relations
// come from four families:
//   shuffle      asym(u sh v) - asym(u)asym(v) over word pairs, all
//                log-eps degrees, products kept as monomial columns
//   stuffle      the same over composition pairs with the quasi-shuffle
//   comparison   power-series vs canonical asymptotics of compositions
//                with a single trailing (1,1) entry (the two eps-cutoff
//                functions coincide there, so all coefficients match)
//   distribution argument-power averaging at levels l | N
// The euler tag is reserved in the wire format but never generated:
// zeta(2) = pi^2/6 is deliberately not imposed.

#include "mzv/lincomb.hpp"
#include "mzv/regularization.hpp"
#include "mzv/words.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace mzv {

// Sorted multiset of convergent compositions; empty = the scalar 1.
struct CompMonomial {
    std::vector<Composition> factors;

    static CompMonomial unit() { return {}; }
    static CompMonomial single(const Composition& c) { return CompMonomial{{c}}; }
    void normalize();
    int weight() const;
    bool is_unit() const { return factors.empty(); }

    friend bool operator==(const CompMonomial& a, const CompMonomial& b) {
        return a.factors == b.factors;
    }
    friend bool operator<(const CompMonomial& a, const CompMonomial& b);
    std::string str() const;
};

using RelRow = LinComb<CompMonomial>;

enum class RelKind { Shuffle, Stuffle, Comparison, Distribution, Euler };

std::string rel_kind_name(RelKind k);

struct Relation {
    RelRow row;
    RelKind kind;
};

struct RelationSystem {
    int weight = 0;
    long level = 1;
    std::set<RelKind> kinds;
    std::vector<Composition> basis;  // convergent compositions of this weight
    std::vector<Relation> rows;      // deduplicated, canonically ordered

    std::string to_jsonl() const;  // one relation per line
};

std::set<RelKind> default_kinds();

RelationSystem generate_relations(int weight, long level, const std::set<RelKind>& kinds,
                                  int threads = 1);

struct ReductionReport {
    int weight = 0;
    long level = 1;
    int rank = 0;
    int nullity = 0;      // columns - rank
    long dim_bound = 0;   // upper bound for dim of the weight-w span
    // new algebra generators found at this weight (free single compositions)
    std::vector<Composition> generators;
    // solved forms: pivot composition -> combination of free monomials
    std::map<Composition, LinComb<CompMonomial>> solved;
    // canonical-regularized values of divergent compositions, reduced
    std::map<Composition, LinComb<CompMonomial>> reg_values;
};

// Weight-by-weight solver; results are memoized per (level, kinds).
class DoubleShuffleSolver {
public:
    explicit DoubleShuffleSolver(long level = 1, std::set<RelKind> kinds = default_kinds(),
                                 int threads = 1);

    const ReductionReport& solve(int weight);
    // Express a combination of convergent compositions in free monomials.
    LinComb<CompMonomial> express(const LinComb<Composition>& v);
    // All generators found up to the given weight.
    std::vector<Composition> generators_upto(int weight) const;

    long level() const { return level_; }
    int threads() const { return threads_; }

private:
    long level_;
    std::set<RelKind> kinds_;
    int threads_;
    std::map<int, ReductionReport> reports_;
    std::map<Composition, LinComb<CompMonomial>> solved_all_;
    std::map<int, std::vector<Composition>> generators_;  // per weight

    void solve_weight(int w);
};

// Stand-alone reduction of one system (internally solves lower weights
// with the same level/kinds).
ReductionReport reduce(const RelationSystem& sys, int threads = 1);

// d_k upper bounds for 2 <= k <= wmax at level 1 (d_0 = 1, d_1 = 0).
std::vector<long> dimension_table(int wmax, int threads = 1);

// All convergent compositions of the given weight at the given level.
std::vector<Composition> convergent_compositions(int weight, long level);
// All compositions (including divergent) of the given weight.
std::vector<Composition> all_compositions(int weight, long level);

}  // namespace mzv
