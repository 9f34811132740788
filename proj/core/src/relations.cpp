#include "mzv/relations.hpp"

#include "mzv/symbols.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

namespace mzv {

void CompMonomial::normalize() {
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const Composition& c) { return c.empty(); }),
                  factors.end());
    std::sort(factors.begin(), factors.end());
}

int CompMonomial::weight() const {
    int w = 0;
    for (const auto& f : factors) w += mzv::weight(f);
    return w;
}

bool operator<(const CompMonomial& a, const CompMonomial& b) { return a.factors < b.factors; }

std::string CompMonomial::str() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "*";
        s += composition_str(factors[i]);
    }
    return s;
}

std::string rel_kind_name(RelKind k) {
    switch (k) {
        case RelKind::Shuffle: return "shuffle";
        case RelKind::Stuffle: return "stuffle";
        case RelKind::Comparison: return "comparison";
        case RelKind::Distribution: return "distribution";
        case RelKind::Euler: return "euler-zeta2";
    }
    return "?";
}

std::set<RelKind> default_kinds() {
    return {RelKind::Shuffle, RelKind::Stuffle, RelKind::Comparison, RelKind::Distribution};
}

std::string RelationSystem::to_jsonl() const {
    std::ostringstream os;
    for (const auto& rel : rows) {
        os << "{\"kind\":\"" << rel_kind_name(rel.kind) << "\",\"terms\":[";
        bool first = true;
        for (const auto& [m, c] : rel.row.terms()) {
            if (!first) os << ",";
            first = false;
            os << "[\"" << c.str() << "\",\"" << m.str() << "\"]";
        }
        os << "]}\n";
    }
    return os.str();
}

std::vector<Composition> all_compositions(int weight, long level) {
    std::vector<Composition> out;
    Composition acc;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(acc);
            return;
        }
        for (int n = 1; n <= rem; ++n)
            for (long k = 0; k < level; ++k) {
                acc.push_back(CompEntry{n, Argument::root(k, level)});
                rec(rem - n);
                acc.pop_back();
            }
    };
    rec(weight);
    return out;
}

std::vector<Composition> convergent_compositions(int weight, long level) {
    std::vector<Composition> out;
    for (auto& c : all_compositions(weight, level))
        if (is_convergent(c)) out.push_back(std::move(c));
    return out;
}

namespace {

// Words over the level-N alphabet {0} + mu_N of the given length.
std::vector<Word> all_words(int len, long level) {
    std::vector<Word> out;
    Word acc;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(acc);
            return;
        }
        acc.push_back(Argument::zero());
        rec(rem - 1);
        acc.pop_back();
        for (long k = 0; k < level; ++k) {
            acc.push_back(Argument::root(k, level));
            rec(rem - 1);
            acc.pop_back();
        }
    };
    rec(len);
    return out;
}

LinComb<CompMonomial> embed(const LinComb<Composition>& v) {
    LinComb<CompMonomial> r;
    for (const auto& [c, co] : v.terms())
        r.add(c.empty() ? CompMonomial::unit() : CompMonomial::single(c), co);
    return r;
}

LinComb<CompMonomial> pair_product(const LinComb<Composition>& a, const LinComb<Composition>& b) {
    LinComb<CompMonomial> r;
    for (const auto& [ca, xa] : a.terms())
        for (const auto& [cb, xb] : b.terms()) {
            CompMonomial m;
            if (!ca.empty()) m.factors.push_back(ca);
            if (!cb.empty()) m.factors.push_back(cb);
            m.normalize();
            r.add(m, xa * xb);
        }
    return r;
}

// Canonical form of a row for dedup: scale so the leading coefficient is 1.
RelRow monic(const RelRow& r) {
    if (r.is_zero()) return r;
    return r.scaled(r.terms().begin()->second.inverse());
}

struct AsymCache {
    std::map<Composition, AsymPoly> st;
    std::map<Word, AsymPoly> sh;

    const AsymPoly& stuffle_of(const Composition& c) {
        auto it = st.find(c);
        if (it == st.end()) it = st.emplace(c, stuffle_asymptotic(c)).first;
        return it->second;
    }
    const AsymPoly& shuffle_of(const Word& w) {
        auto it = sh.find(w);
        if (it == sh.end()) it = sh.emplace(w, shuffle_asymptotic(w)).first;
        return it->second;
    }
};

// Rows equating two asymptotic polynomials where the right side is the
// monomial product of two polynomials.
void emit_poly_rows(const AsymPoly& lhs, const AsymPoly& a, const AsymPoly& b, RelKind kind,
                    std::vector<Relation>& out) {
    int maxdeg = std::max(lhs.degree(), a.degree() + b.degree());
    for (int d = 0; d <= maxdeg; ++d) {
        LinComb<CompMonomial> row = embed(lhs.coeff(d));
        for (int i = 0; i <= d; ++i) {
            LinComb<Composition> ca = a.coeff(i), cb = b.coeff(d - i);
            if (ca.is_zero() || cb.is_zero()) continue;
            row -= pair_product(ca, cb);
        }
        if (!row.is_zero()) out.push_back(Relation{monic(row), kind});
    }
}

void emit_equality_rows(const AsymPoly& lhs, const AsymPoly& rhs, RelKind kind,
                        std::vector<Relation>& out) {
    int maxdeg = std::max(lhs.degree(), rhs.degree());
    for (int d = 0; d <= maxdeg; ++d) {
        LinComb<CompMonomial> row = embed(lhs.coeff(d)) - embed(rhs.coeff(d));
        if (!row.is_zero()) out.push_back(Relation{monic(row), kind});
    }
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

RelationSystem generate_relations(int weight, long level, const std::set<RelKind>& kinds,
                                  int threads) {
    if (weight < 1 || (level == 1 && weight > 10) || (level > 1 && (weight > 5 || level > 6)))
        throw std::invalid_argument(
            "generate_relations: desk-scale limits are w <= 10 at level 1, w <= 5 for N <= 6");
    RelationSystem sys;
    sys.weight = weight;
    sys.level = level;
    sys.kinds = kinds;
    sys.basis = convergent_compositions(weight, level);

    // Enumerate the work units first so threads can split them evenly.
    struct Job {
        enum class What { StufflePair, ShufflePair, Comparison, Distribution } what;
        Composition p, q;
        Word u, v;
        long l = 1;
        long w_minus_m = 0;
    };
    std::vector<Job> jobs;

    if (kinds.count(RelKind::Stuffle)) {
        std::vector<std::vector<Composition>> byw(weight);
        for (int k = 1; k < weight; ++k) byw[k] = all_compositions(k, level);
        for (int k = 1; 2 * k <= weight; ++k) {
            const auto& left = byw[k];
            const auto& right = byw[weight - k];
            for (std::size_t i = 0; i < left.size(); ++i)
                for (std::size_t j = (2 * k == weight ? i : 0); j < right.size(); ++j)
                    jobs.push_back(Job{Job::What::StufflePair, left[i], right[j], {}, {}, 1, 0});
        }
    }
    if (kinds.count(RelKind::Shuffle)) {
        std::vector<std::vector<Word>> byw(weight);
        for (int k = 1; k < weight; ++k) byw[k] = all_words(k, level);
        for (int k = 1; 2 * k <= weight; ++k) {
            const auto& left = byw[k];
            const auto& right = byw[weight - k];
            for (std::size_t i = 0; i < left.size(); ++i)
                for (std::size_t j = (2 * k == weight ? i : 0); j < right.size(); ++j)
                    jobs.push_back(Job{Job::What::ShufflePair, {}, {}, left[i], right[j], 1, 0});
        }
    }
    if (kinds.count(RelKind::Comparison)) {
        for (const auto& c : all_compositions(weight, level)) {
            if (is_convergent(c)) continue;
            // exactly one trailing (1,1) entry
            const std::size_t m = c.size();
            if (m >= 2 && c[m - 2].n == 1 && c[m - 2].x.is_one()) continue;
            jobs.push_back(Job{Job::What::Comparison, c, {}, {}, {}, 1, 0});
        }
    }
    if (kinds.count(RelKind::Distribution) && level > 1) {
        for (long l : divisors(level)) {
            if (l == 1) continue;
            for (const auto& c : all_compositions(weight, level)) {
                int m = depth(c);
                if (weight == 1 && c[0].x.power(l).is_one()) continue;
                Job job{Job::What::Distribution, c, {}, {}, {}, l, weight - m};
                jobs.push_back(job);
            }
        }
    }

    const int nthreads = std::max(1, threads);
    std::vector<std::vector<Relation>> partial(nthreads);
    auto work = [&](int tid) {
        AsymCache cache;
        for (std::size_t idx = tid; idx < jobs.size(); idx += nthreads) {
            const Job& job = jobs[idx];
            std::vector<Relation>& out = partial[tid];
            switch (job.what) {
                case Job::What::StufflePair: {
                    AsymPoly lhs;
                    for (const auto& [c, co] : stuffle(job.p, job.q).terms())
                        lhs += cache.stuffle_of(c).scaled(co);
                    emit_poly_rows(lhs, cache.stuffle_of(job.p), cache.stuffle_of(job.q),
                                   RelKind::Stuffle, out);
                    break;
                }
                case Job::What::ShufflePair: {
                    AsymPoly lhs;
                    for (const auto& [w, co] : shuffle(job.u, job.v).terms())
                        lhs += cache.shuffle_of(w).scaled(co);
                    emit_poly_rows(lhs, cache.shuffle_of(job.u), cache.shuffle_of(job.v),
                                   RelKind::Shuffle, out);
                    break;
                }
                case Job::What::Comparison: {
                    auto [sign, sym] = li_to_i(job.p);
                    (void)sign;
                    emit_equality_rows(cache.stuffle_of(job.p),
                                       cache.shuffle_of(symbol_word(sym)), RelKind::Comparison,
                                       out);
                    break;
                }
                case Job::What::Distribution: {
                    // Li(x_i^l) = l^{w-m} sum over twists by l-th roots
                    Composition lhsc;
                    for (const auto& e : job.p) lhsc.push_back(CompEntry{e.n, e.x.power(job.l)});
                    AsymPoly lhs = cache.stuffle_of(lhsc);
                    AsymPoly rhs;
                    const int m = depth(job.p);
                    std::vector<long> a(m, 0);
                    Argument zl = Argument::root(sys.level / job.l, sys.level);
                    std::function<void(int)> rec = [&](int i) {
                        if (i == m) {
                            Composition c;
                            for (int t = 0; t < m; ++t)
                                c.push_back(
                                    CompEntry{job.p[t].n, job.p[t].x.times(zl.power(a[t]))});
                            rhs += cache.stuffle_of(c);
                            return;
                        }
                        for (a[i] = 0; a[i] < job.l; ++a[i]) rec(i + 1);
                        a[i] = 0;
                    };
                    rec(0);
                    mpz_class scale = 1;
                    for (long t = 0; t < job.w_minus_m; ++t) scale *= job.l;
                    rhs = rhs.scaled(Rational(scale));
                    emit_equality_rows(lhs, rhs, RelKind::Distribution, out);
                    break;
                }
            }
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    std::vector<Relation> merged;
    for (auto& part : partial)
        for (auto& rel : part) merged.push_back(std::move(rel));
    std::sort(merged.begin(), merged.end(), [](const Relation& a, const Relation& b) {
        if (a.row.terms() != b.row.terms()) return a.row.terms() < b.row.terms();
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
    merged.erase(std::unique(merged.begin(), merged.end(),
                             [](const Relation& a, const Relation& b) {
                                 return a.row == b.row;
                             }),
                 merged.end());
    sys.rows = std::move(merged);
    return sys;
}

// ---------------------------------------------------------------------
// solver

DoubleShuffleSolver::DoubleShuffleSolver(long level, std::set<RelKind> kinds, int threads)
    : level_(level), kinds_(std::move(kinds)), threads_(threads) {}

std::vector<Composition> DoubleShuffleSolver::generators_upto(int weight) const {
    std::vector<Composition> out;
    for (const auto& [w, gens] : generators_) {
        if (w > weight) break;
        out.insert(out.end(), gens.begin(), gens.end());
    }
    return out;
}

LinComb<CompMonomial> DoubleShuffleSolver::express(const LinComb<Composition>& v) {
    LinComb<CompMonomial> out;
    for (const auto& [c, co] : v.terms()) {
        if (c.empty()) {
            out.add(CompMonomial::unit(), co);
            continue;
        }
        auto it = solved_all_.find(c);
        if (it != solved_all_.end())
            out += it->second.scaled(co);
        else
            out.add(CompMonomial::single(c), co);
    }
    return out;
}

namespace {

// Rewrite a monomial by substituting solved forms of its factors.
LinComb<CompMonomial> substitute_monomial(
    const CompMonomial& m, const std::map<Composition, LinComb<CompMonomial>>& solved) {
    LinComb<CompMonomial> acc(CompMonomial::unit());
    for (const auto& f : m.factors) {
        LinComb<CompMonomial> factor;
        auto it = solved.find(f);
        if (it != solved.end())
            factor = it->second;
        else
            factor = LinComb<CompMonomial>(CompMonomial::single(f));
        LinComb<CompMonomial> next;
        for (const auto& [ma, ca] : acc.terms())
            for (const auto& [mb, cb] : factor.terms()) {
                CompMonomial prod = ma;
                prod.factors.insert(prod.factors.end(), mb.factors.begin(), mb.factors.end());
                prod.normalize();
                next.add(prod, ca * cb);
            }
        acc = std::move(next);
    }
    return acc;
}

// Weight-w monomials over the generator list (weights >= 2 each).
void enumerate_gen_monomials(const std::vector<Composition>& gens, int w,
                             std::vector<CompMonomial>& out) {
    CompMonomial acc;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (rem == 0) {
            CompMonomial m = acc;
            m.normalize();
            out.push_back(m);
            return;
        }
        if (i == gens.size()) return;
        rec(i + 1, rem);
        int gw = weight(gens[i]);
        if (gw <= rem) {
            acc.factors.push_back(gens[i]);
            rec(i, rem - gw);
            acc.factors.pop_back();
        }
    };
    rec(0, w);
}

}  // namespace

void DoubleShuffleSolver::solve_weight(int w) {
    if (reports_.count(w)) return;
    for (int k = 1; k < w; ++k) solve_weight(k);

    RelationSystem sys = generate_relations(w, level_, kinds_, threads_);

    // Column universe: weight-w convergent singles, then monomials in the
    // generators of lower weights (substitution makes every product land
    // here). Singles come first so the elimination solves them in terms of
    // generator products.
    std::vector<Composition> singles = sys.basis;
    std::sort(singles.begin(), singles.end());
    std::vector<CompMonomial> genmons;
    enumerate_gen_monomials(generators_upto(w - 1), w, genmons);
    std::sort(genmons.begin(), genmons.end());

    std::map<CompMonomial, int> colindex;
    std::vector<CompMonomial> columns;
    for (const auto& c : singles) {
        CompMonomial m = CompMonomial::single(c);
        colindex.emplace(m, static_cast<int>(columns.size()));
        columns.push_back(m);
    }
    for (const auto& m : genmons)
        if (!colindex.count(m)) {
            colindex.emplace(m, static_cast<int>(columns.size()));
            columns.push_back(m);
        }

    // Substituted sparse rows.
    using SparseRow = std::map<int, Rational>;
    std::vector<SparseRow> rows;
    for (const auto& rel : sys.rows) {
        // Rows are weight-homogeneous; log-eps coefficients of positive
        // degree carry weight < w and are subsumed by the lower-weight
        // systems solved before this one.
        bool full_weight = true;
        for (const auto& [m, c] : rel.row.terms())
            if (m.weight() != w) {
                full_weight = false;
                break;
            }
        if (!full_weight) continue;
        LinComb<CompMonomial> subst;
        for (const auto& [m, c] : rel.row.terms()) {
            if (m.factors.size() == 1 && weight(m.factors[0]) == w) {
                subst.add(m, c);  // weight-w unknown single
            } else {
                subst += substitute_monomial(m, solved_all_).scaled(c);
            }
        }
        if (subst.is_zero()) continue;
        SparseRow sr;
        for (const auto& [m, c] : subst.terms()) {
            auto it = colindex.find(m);
            if (it == colindex.end()) {
                // a monomial outside the universe can only come from an
                // unreduced lower-weight composition, which cannot happen
                // once every lower weight is solved
                throw std::logic_error("relation column outside the universe: " + m.str());
            }
            sr[it->second] = c;
        }
        if (!sr.empty()) rows.push_back(std::move(sr));
    }

    // Deterministic elimination: pivot on the smallest column index, then
    // the sparsest row, then the lexicographically smallest row.
    std::vector<SparseRow> pivots;  // reduced rows, pivot = first column
    auto row_less = [](const SparseRow& a, const SparseRow& b) {
        std::size_t la = a.size(), lb = b.size();
        if (la != lb) return la < lb;
        auto ia = a.begin(), ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return false;
    };
    bool progress = true;
    std::vector<bool> used(rows.size(), false);
    while (progress) {
        progress = false;
        int best = -1, bestcol = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i].empty()) continue;
            int col = rows[i].begin()->first;
            if (best == -1 || col < bestcol ||
                (col == bestcol && row_less(rows[i], rows[best]))) {
                best = static_cast<int>(i);
                bestcol = col;
            }
        }
        if (best == -1) break;
        progress = true;
        used[best] = true;
        SparseRow pv = rows[best];
        Rational lead = pv.begin()->second;
        for (auto& [c, v] : pv) v /= lead;
        // eliminate from all other rows and existing pivots
        auto eliminate = [&](SparseRow& r) {
            auto it = r.find(bestcol);
            if (it == r.end()) return;
            Rational f = it->second;
            for (const auto& [c, v] : pv) {
                auto jt = r.find(c);
                if (jt == r.end()) {
                    r.emplace(c, -f * v);
                } else {
                    jt->second -= f * v;
                    if (jt->second.is_zero()) r.erase(jt);
                }
            }
        };
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i]) eliminate(rows[i]);
        for (auto& p : pivots) eliminate(p);
        pivots.push_back(std::move(pv));
    }

    ReductionReport rep;
    rep.weight = w;
    rep.level = level_;
    rep.rank = static_cast<int>(pivots.size());
    rep.nullity = static_cast<int>(columns.size()) - rep.rank;
    rep.dim_bound = rep.nullity;

    // Solved forms for pivot columns that are weight-w singles.
    std::set<int> pivot_cols;
    for (const auto& p : pivots) pivot_cols.insert(p.begin()->first);
    for (const auto& p : pivots) {
        int col = p.begin()->first;
        if (col >= static_cast<int>(singles.size())) continue;  // pivot among generator monomials
        LinComb<CompMonomial> rhs;
        for (auto it = std::next(p.begin()); it != p.end(); ++it)
            rhs.add(columns[it->first], -it->second);
        rep.solved[singles[col]] = rhs;
        solved_all_[singles[col]] = rhs;
    }
    // Free singles are the new generators.
    std::vector<Composition> gens;
    for (std::size_t i = 0; i < singles.size(); ++i)
        if (!pivot_cols.count(static_cast<int>(i))) gens.push_back(singles[i]);
    rep.generators = gens;
    generators_[w] = gens;

    // Canonical-regularized values of the divergent compositions.
    for (const auto& c : all_compositions(w, level_)) {
        if (is_convergent(c)) continue;
        auto [sign, sym] = li_to_i(c);
        (void)sign;
        rep.reg_values[c] = express(shuffle_asymptotic(symbol_word(sym)).constant_term());
    }

    reports_[w] = std::move(rep);
}

const ReductionReport& DoubleShuffleSolver::solve(int weight) {
    solve_weight(weight);
    return reports_.at(weight);
}

ReductionReport reduce(const RelationSystem& sys, int threads) {
    DoubleShuffleSolver solver(sys.level, sys.kinds, threads);
    return solver.solve(sys.weight);
}

std::vector<long> dimension_table(int wmax, int threads) {
    DoubleShuffleSolver solver(1, default_kinds(), threads);
    std::vector<long> dims;
    for (int w = 2; w <= wmax; ++w) dims.push_back(solver.solve(w).dim_bound);
    return dims;
}

}  // namespace mzv
