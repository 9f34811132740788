#include "mzv/rational.hpp"

#include <mutex>
#include <ostream>
#include <vector>

namespace mzv {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

mpz_class factorial_z(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class binomial_z(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational binomial(const Rational& top, unsigned long k) {
    Rational acc(1);
    for (unsigned long i = 0; i < k; ++i) acc *= top - Rational(static_cast<long>(i));
    return acc / Rational(mpz_class(factorial_z(k)));
}

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rational>& bernoulli_table() {
    static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
    return table;
}
}  // namespace

const Rational& BernoulliCache::get(unsigned long n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    auto& table = bernoulli_table();
    // Recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1.
    while (table.size() <= n) {
        unsigned long m = table.size();
        Rational sum(0);
        for (unsigned long k = 0; k < m; ++k)
            sum += Rational(mpz_class(binomial_z(m + 1, k))) * table[k];
        table.push_back(-sum / Rational(mpz_class(binomial_z(m + 1, m))));
    }
    return table[n];
}

Rational BernoulliCache::beta(unsigned long p) {
    if (p == 0) return Rational(1);
    return get(p) / Rational(static_cast<long>(p));
}

Rational zeta_nonpositive(long n) {
    if (n > 0) throw std::domain_error("zeta_nonpositive: argument must be <= 0");
    // zeta(1-m) = -B_m/m with m = 1-n >= 1; zeta(0) = B_1 = -1/2.
    unsigned long m = static_cast<unsigned long>(1 - n);
    if (m == 1) return Rational(-1, 2);
    return -BernoulliCache::get(m) / Rational(static_cast<long>(m));
}

}  // namespace mzv
