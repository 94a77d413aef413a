#include "ptorsion/hall_littlewood.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ptorsion/errors.hpp"
#include "ptorsion/qseries.hpp"

namespace ptorsion {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<int> padded(const Partition& lambda, int n) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda.parts()[i];
    return e;
}

RatPoly divide_by_vandermonde(RatPoly p, int n) {
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) p = p.divide_by_linear(i, j, UniRat(1));
    }
    return p;
}

// Sum over S_n / S_n^lambda of sgn(w) w(G), divided by the Vandermonde product.
RatPoly coset_symmetrize(const Partition& lambda, int n) {
    const auto names = RatPoly::in_x(n).names();
    const std::vector<int> e = padded(lambda, n);
    RatPoly g = RatPoly::term(names, e, UniRat(1));
    const UniRat q = UniRat::param('q');
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            RatPoly f = RatPoly::variable(names, i);
            f -= RatPoly::variable(names, j, e[i] > e[j] ? q : UniRat(1));
            g *= f;
        }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    RatPoly total(names);
    do {
        bool canonical = true;
        for (int i = 0; i + 1 < n && canonical; ++i) {
            if (e[i] == e[i + 1] && perm[i] > perm[i + 1]) canonical = false;
        }
        if (!canonical) continue;
        RatPoly t = g.permuted(perm);
        if (permutation_sign(perm) < 0) t = -t;
        total += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return divide_by_vandermonde(std::move(total), n);
}

} // namespace

const HLValue& hl_p(const Partition& lambda, int n) {
    if (n > kMaxHLAlphabet) {
        throw ResourceLimitError("max_hl_alphabet", "Hall-Littlewood alphabet of size " + std::to_string(n) +
                                                        " exceeds " + std::to_string(kMaxHLAlphabet));
    }
    if (n < 0) throw DimensionError("negative alphabet size");
    static std::mutex m;
    static std::map<std::pair<Partition, int>, HLValue> cache;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find({lambda, n});
        if (it != cache.end()) return it->second;
    }
    HLValue v{lambda, n, RatPoly::in_x(n)};
    if (lambda.length() <= n) {
        v.poly = coset_symmetrize(lambda, n);
        int degree = 0;
        if (!v.poly.is_symmetric(0, n)) throw std::logic_error("P_lambda is not symmetric");
        if (!v.poly.is_homogeneous(0, n, &degree) || degree != lambda.size()) {
            throw std::logic_error("P_lambda is not homogeneous of degree |lambda|");
        }
        if (!v.poly.coeff(padded(lambda, n)).is_one()) throw std::logic_error("P_lambda is not monic in x^lambda");
    }
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(std::make_pair(lambda, n), std::move(v)).first->second;
}

UniRat b_lambda(const Partition& lambda) {
    UniRat r(1);
    for (int i = 1; i <= lambda.largest(); ++i) r *= UniRat(q_factorial(lambda.multiplicity(i)));
    return r;
}

PrincipalValue principal_spec_closed(const Partition& lambda, std::optional<int> n) {
    PrincipalValue v{lambda.size(), UniRat()};
    if (n && lambda.length() > *n) return v;
    UniRat c = UniRat::monomial(1, static_cast<int>(nstat(lambda))) / b_lambda(lambda);
    if (n) c *= UniRat(q_factorial(*n)) / UniRat(q_factorial(*n - lambda.length()));
    v.coeff = c;
    return v;
}

PrincipalValue principal_spec(const Partition& lambda, std::optional<int> n) {
    PrincipalValue v = principal_spec_closed(lambda, n);
    if (n && *n <= kMaxHLAlphabet) {
        std::vector<UniRat> point;
        for (int i = 0; i < *n; ++i) point.push_back(UniRat::monomial(1, i));
        // Homogeneity of P_lambda turns x_i = z q^{i-1} into z^{|lambda|} P_lambda(1, q, ...).
        const UniRat direct = hl_p(lambda, *n).poly.evaluate(point);
        if (direct != v.coeff) throw std::logic_error("principal specialisation disagrees with P_lambda");
    }
    return v;
}

RatPoly schur_poly(const Partition& lambda, int n) {
    RatPoly out = RatPoly::in_x(n);
    if (lambda.length() > n) return out;
    const auto names = out.names();
    std::vector<int> e = padded(lambda, n);
    for (int j = 0; j < n; ++j) e[j] += n - 1 - j;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    RatPoly alt(names);
    do {
        std::vector<int> f(n);
        for (int i = 0; i < n; ++i) f[perm[i]] = e[i];
        alt.add_term(f, UniRat(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return divide_by_vandermonde(std::move(alt), n);
}

RatPoly monomial_symmetric(const Partition& lambda, int n) {
    RatPoly out = RatPoly::in_x(n);
    if (lambda.length() > n) return out;
    std::vector<int> e = padded(lambda, n);
    std::sort(e.begin(), e.end());
    do {
        out.add_term(e, UniRat(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

RatPoly hl_at_q(const Partition& lambda, int n, long value) {
    const RatPoly& p = hl_p(lambda, n).poly;
    return p.map_coeffs<UniRat>([value](const UniRat& c) { return UniRat(c.evaluate(mpq_class(value))); });
}

} // namespace ptorsion

namespace ptorsion {

UniRat hl_evaluate(const Partition& lambda, const std::vector<UniRat>& x) {
    const int n = static_cast<int>(x.size());
    if (lambda.length() > n) return UniRat();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (x[i] == x[j]) throw SingularityError("hl_evaluate needs pairwise distinct coordinates");
        }
    }
    const std::vector<int> e = padded(lambda, n);
    const UniRat q = UniRat::param('q');
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    UniRat total;
    do {
        bool canonical = true;
        for (int i = 0; i + 1 < n && canonical; ++i) {
            if (e[i] == e[i + 1] && perm[i] > perm[i + 1]) canonical = false;
        }
        if (!canonical) continue;
        // Exponent e[i] sits on coordinate perm[i].
        UniRat term(1);
        for (int i = 0; i < n; ++i) term *= x[perm[i]].pow(e[i]);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (e[i] > e[j]) term *= (x[perm[i]] - q * x[perm[j]]) / (x[perm[i]] - x[perm[j]]);
            }
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace ptorsion
