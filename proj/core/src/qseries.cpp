#include "ptorsion/qseries.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptorsion/errors.hpp"

namespace ptorsion {

UniRat qpochhammer(const UniRat& a, const UniRat& base, int k) {
    UniRat r(1);
    if (k >= 0) {
        UniRat term = a;
        for (int j = 0; j < k; ++j) {
            r *= UniRat(1) - term;
            term *= base;
        }
        return r;
    }
    const UniRat inv = base.inverse();
    UniRat term = a * inv;
    for (int j = 1; j <= -k; ++j) {
        UniRat f = UniRat(1) - term;
        if (f.is_zero()) throw SingularityError("vanishing factor in a negative-order q-shifted factorial");
        r *= f;
        term *= inv;
    }
    return r.inverse();
}

UniRat qpochhammer(const UniRat& coefficient, int power, int k, char var) {
    return qpochhammer(coefficient * UniRat::monomial(1, power, var), UniRat::param(var), k);
}

namespace {

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

const IntPoly& q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial of a negative integer");
    static std::deque<IntPoly> table{IntPoly(1)};
    std::lock_guard<std::mutex> lock(cache_mutex());
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size());
        table.push_back(table.back() * IntPoly::one_minus(1, m));
    }
    return table[n];
}

ZSeries qpochhammer_inf(const UniRat& c, int zpow, const UniRat& base, std::optional<int> order) {
    if (!order) throw std::invalid_argument("infinite q-shifted factorial needs a truncation order");
    if (zpow < 1) throw std::invalid_argument("infinite q-shifted factorial needs a positive power of z");
    ZSeries s(*order);
    UniRat pw(1);        // (-c)^k
    UniRat qpart(1);     // base^{C(k,2)}
    UniRat den(1);       // (base; base)_k
    UniRat bk(1);        // base^k
    for (int k = 0; k * zpow <= *order; ++k) {
        if (k > 0) {
            pw *= -c;
            qpart *= bk;  // base^{C(k,2)} = base^{C(k-1,2)} * base^{k-1}
            bk *= base;
            den *= UniRat(1) - bk;
        }
        s.set_coeff(k * zpow, pw * qpart / den);
    }
    return s;
}

ZSeries qpochhammer_inf_inverse(const UniRat& c, int zpow, const UniRat& base, std::optional<int> order) {
    if (!order) throw std::invalid_argument("infinite q-shifted factorial needs a truncation order");
    if (zpow < 1) throw std::invalid_argument("infinite q-shifted factorial needs a positive power of z");
    ZSeries s(*order);
    UniRat pw(1);
    UniRat den(1);
    UniRat bk(1);
    for (int k = 0; k * zpow <= *order; ++k) {
        if (k > 0) {
            pw *= c;
            bk *= base;
            den *= UniRat(1) - bk;
        }
        s.set_coeff(k * zpow, pw / den);
    }
    return s;
}

const UniRat& qbinomial(int n, int k) {
    static const UniRat zero;
    if (k < 0 || n < 0 || k > n) return zero;
    static std::map<std::pair<int, int>, UniRat> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find({n, k});
        if (it != cache.end()) return it->second;
    }
    const IntPoly& num = q_factorial(n);
    IntPoly den = q_factorial(k) * q_factorial(n - k);
    UniRat value(exact_div(num, den));
    if (!value.has_nonnegative_integer_coeffs()) {
        throw std::logic_error("q-binomial with a negative coefficient");
    }
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cache.emplace(std::make_pair(n, k), std::move(value)).first->second;
}

mpz_class qbinomial_at(int n, int k, const mpz_class& b) {
    const UniRat& v = qbinomial(n, k);
    return v.num().evaluate(b);
}

bool qbinomial_inverse_identity(int n, int k) {
    if (k < 0 || k > n) return qbinomial(n, k).is_zero();
    const UniRat& v = qbinomial(n, k);
    return v.substitute_power(-1) == v.shifted(k * (k - n));
}

} // namespace ptorsion
