#include "identity_cases.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ptorsion/errors.hpp"
#include "ptorsion/group_oracle.hpp"
#include "ptorsion/hall_littlewood.hpp"
#include "ptorsion/mpoly.hpp"
#include "ptorsion/partition.hpp"
#include "ptorsion/qseries.hpp"
#include "ptorsion/rlambda.hpp"
#include "ptorsion/zseries.hpp"

namespace ptorsion::detail {

namespace {

using Key = std::vector<int>;
using Names = std::vector<std::string>;

UniRat qpow(long k) { return UniRat::monomial(1, static_cast<int>(k), 'q'); }
UniRat qfac(int n) { return UniRat(q_factorial(n)); }
UniRat qfac_sq(int n) { return UniRat(q_factorial(n).compose_power(2)); }

template <class T>
T require(const std::optional<T>& v, const char* name) {
    if (!v) throw std::invalid_argument(std::string("missing parameter ") + name);
    return *v;
}

void put_series(std::map<Key, UniRat>& out, const ZSeries& s) {
    for (int i = 0; i <= s.order(); ++i) {
        if (!s.coeff_at(i).is_zero()) out[{i}] = s.coeff_at(i);
    }
}

void put_poly(std::map<Key, UniRat>& out, const RatPoly& p) {
    for (const auto& [e, c] : p.terms()) out[e] = c;
}

/// target += scale * z^shift * s, dropping terms above the target order.
void add_shifted(ZSeries& target, const ZSeries& s, int shift, const UniRat& scale) {
    for (int i = 0; i <= s.order(); ++i) target.add_to_coeff(i + shift, s.coeff_at(i) * scale);
}

/// sum_nu C_{lambda,nu}(q^{-base}) * w^{|nu|}, with w = factor * z^zpow.
ZSeries c_generating(const Partition& lambda, int order, int base, int zpow, const UniRat& factor) {
    ZSeries r(order);
    for (const auto& nu : subpartitions(lambda)) {
        const UniRat c = c_coeff(lambda, nu).substitute_power(-base);
        r.add_to_coeff(zpow * nu.size(), c * factor.pow(nu.size()));
    }
    return r;
}

/// 1 - c * x^e over `names`.
RatPoly one_minus(const Names& names, Key e, const UniRat& c) {
    RatPoly r = RatPoly::constant(names, UniRat(1));
    r.add_term(std::move(e), -c);
    return r;
}

Key unit(std::size_t n, std::initializer_list<std::pair<int, int>> entries) {
    Key e(n, 0);
    for (auto [i, v] : entries) e[i] += v;
    return e;
}

/// (a; 1/q)_k = prod_{i<k} (1 - a q^{-i}) with a the variable at index ai.
RatPoly a_poch(const Names& names, int ai, int k) {
    RatPoly r = RatPoly::constant(names, UniRat(1));
    for (int i = 0; i < k; ++i) r *= one_minus(names, unit(names.size(), {{ai, 1}}), qpow(-i));
    return r;
}

/// Places a polynomial over its own variables at positions offset.. of `names`.
RatPoly embed(const RatPoly& p, const Names& names, int offset) {
    RatPoly r(names);
    for (const auto& [e, c] : p.terms()) {
        Key k(names.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) k[offset + i] = e[i];
        r.add_term(std::move(k), c);
    }
    return r;
}

/// sum_{j<=bound} (c x^e)^j, a truncated geometric series.
RatPoly geometric(const Names& names, const Key& e, const UniRat& c, int bound) {
    RatPoly r(names);
    Key k(names.size(), 0);
    UniRat cj(1);
    for (int j = 0; j <= bound; ++j) {
        r.add_term(k, cj);
        for (std::size_t i = 0; i < k.size(); ++i) k[i] += e[i];
        cj *= c;
    }
    return r;
}

std::vector<Partition> partitions_up_to(int total, std::optional<int> max_part, std::optional<int> max_length) {
    std::vector<Partition> out;
    for (int s = 0; s <= total; ++s) {
        for (auto& p : partitions_of(s, max_part, max_length)) out.push_back(std::move(p));
    }
    return out;
}

SideTable qbin(const CaseParams& p) {
    const int n = require(p.n, "n");
    SideTable t{{"z"}, {}, {}};
    ZSeries lhs(n), rhs = ZSeries::constant(n, UniRat(1));
    for (int k = 0; k <= n; ++k) {
        lhs.set_coeff(k, qbinomial(n, k) * qpow(choose2(k)) * UniRat(k % 2 ? -1L : 1L));
    }
    for (int j = 0; j < n; ++j) {
        ZSeries f = ZSeries::constant(n, UniRat(1));
        f.set_coeff(1, -qpow(j));
        rhs *= f;
    }
    put_series(t.lhs, lhs);
    put_series(t.rhs, rhs);
    return t;
}

SideTable euler(const CaseParams& p) {
    const int zmax = require(p.zmax, "zmax");
    const UniRat P = UniRat::param('p');
    const UniRat inv = P.inverse();
    SideTable t{{"z"}, {}, {}};
    ZSeries lhs(zmax);
    for (int n = 0; n <= zmax; ++n) lhs.set_coeff(n, (P.pow(n) * qpochhammer(inv, inv, n)).inverse());
    put_series(t.lhs, lhs);
    put_series(t.rhs, qpochhammer_inf(inv, 1, inv, zmax).inverse());
    return t;
}

SideTable genfun(const CaseParams& p) {
    const Partition lambda = require(p.lambda, "lambda");
    const long prime = require(p.p, "p");
    const int zmax = require(p.zmax, "zmax");
    SideTable t{{"z"}, {}, {}};
    ZSeries lhs(zmax);
    for (int n = 0; n <= zmax; ++n) {
        for (const auto& mu : partitions_of(n)) {
            PGroup h(prime, mu);
            mpz_class x = 1;
            for (int i = 1; i <= lambda.largest(); ++i) {
                const int m = lambda.multiplicity(i);
                if (m == 0) continue;
                mpz_class tor = torsion_order_brute(h, i), pw;
                mpz_pow_ui(pw.get_mpz_t(), tor.get_mpz_t(), static_cast<unsigned long>(m));
                x *= pw;
            }
            lhs.add_to_coeff(n, UniRat(mpq_class(x, aut_order(mu, prime))));
        }
    }
    const UniRat inv(mpq_class(1, prime));
    ZSeries rhs = qpochhammer_inf_inverse(inv, 1, inv, zmax);
    ZSeries c(zmax);
    for (const auto& nu : subpartitions(lambda)) {
        c.add_to_coeff(nu.size(), UniRat(c_coeff(lambda, nu).evaluate(mpq_class(prime))));
    }
    put_series(t.lhs, lhs);
    put_series(t.rhs, rhs * c);
    return t;
}

SideTable combinat(const CaseParams& p) {
    const Partition lambda = require(p.lambda, "lambda");
    const int zmax = require(p.zmax, "zmax");
    SideTable t{{"z"}, {}, {}};
    ZSeries lhs(zmax);
    for (const auto& mu : partitions_up_to(zmax, std::nullopt, std::nullopt)) {
        long e = 0, prefix = 0;
        for (int i = 1; i <= std::max(mu.length(), lambda.largest()); ++i) {
            e += static_cast<long>(mu.part(i)) * mu.part(i);
            prefix += mu.part(i);
            e -= static_cast<long>(lambda.multiplicity(i)) * prefix;
        }
        lhs.add_to_coeff(mu.size(), qpow(e) / b_lambda(mu.conjugate()));
    }
    const UniRat q = UniRat::param('q');
    ZSeries rhs = qpochhammer_inf_inverse(q, 1, q, zmax) * c_generating(lambda, zmax, 1, 1, UniRat(1));
    put_series(t.lhs, lhs);
    put_series(t.rhs, rhs);
    return t;
}

/// sum_{mu_1 <= ell} z^{|mu|} q^{2n(mu) + shift(mu)} / b_mu * (z q^{mu'_ell + 1}; q)_inf.
ZSeries moment_series(const Partition* lambda, int ell, int zmax) {
    const UniRat q = UniRat::param('q');
    ZSeries r(zmax);
    for (const auto& mu : partitions_up_to(zmax, ell, std::nullopt)) {
        long e = 2 * nstat(mu);
        if (lambda) e += mu.size() - dot_product_conjugates(*lambda, mu);
        const ZSeries tail = qpochhammer_inf(qpow(mu.conj_part(ell) + 1), 1, q, zmax - mu.size());
        add_shifted(r, tail, mu.size(), qpow(e) / b_lambda(mu));
    }
    return r;
}

SideTable umoy_abelian(const CaseParams& p) {
    const Partition lambda = require(p.lambda, "lambda");
    const int ell = require(p.ell, "ell");
    const int zmax = require(p.zmax, "zmax");
    if (lambda.largest() > ell) throw DimensionError("lambda_1 must not exceed ell");
    SideTable t{{"z"}, {}, {}};
    put_series(t.lhs, moment_series(&lambda, ell, zmax));
    put_series(t.rhs, c_generating(lambda, zmax, 1, 1, UniRat(1)));
    return t;
}

SideTable umoy_type_s(const CaseParams& p) {
    const Partition lambda = require(p.lambda, "lambda");
    const int ell = require(p.ell, "ell");
    const int zmax = require(p.zmax, "zmax");
    if (lambda.largest() > ell) throw DimensionError("lambda_1 must not exceed ell");
    const Partition lc = lambda.conjugate();
    const UniRat q2 = UniRat::monomial(1, 2, 'q');
    SideTable t{{"z"}, {}, {}};
    ZSeries lhs(zmax);
    // rho runs over rank sequences of length <= ell.
    for (const auto& rho : partitions_up_to(zmax / 2, std::nullopt, ell)) {
        long e = -rho.size();
        for (int i = 1; i <= rho.length(); ++i) {
            e += 2L * rho.part(i) * rho.part(i) - 2L * lc.part(i) * rho.part(i);
        }
        UniRat den(1);
        for (int j = 1; j <= ell; ++j) den *= qfac_sq(rho.part(j) - rho.part(j + 1));
        const ZSeries tail = qpochhammer_inf(qpow(2 * rho.part(ell) + 1), 2, q2, zmax - 2 * rho.size());
        add_shifted(lhs, tail, 2 * rho.size(), qpow(e) / den);
    }
    put_series(t.lhs, lhs);
    put_series(t.rhs, c_generating(lambda, zmax, 2, 2, qpow(-1)));
    return t;
}

SideTable row_case(const CaseParams& p) {
    const int ell = require(p.ell, "ell");
    const int zmax = require(p.zmax, "zmax");
    SideTable t{{"z"}, {}, {}};
    ZSeries rhs(zmax);
    for (int k = 0; k <= std::min(ell, zmax); ++k) rhs.set_coeff(k, UniRat(1));
    put_series(t.lhs, moment_series(nullptr, ell, zmax));
    put_series(t.rhs, rhs);
    return t;
}

SideTable mirror_swap(const CaseParams& p) {
    const Partition lambda = require(p.lambda, "lambda");
    const int ell = require(p.ell, "ell");
    const int zmax = require(p.zmax, "zmax");
    const int umax = require(p.umax, "umax");
    if (lambda.largest() > ell) throw DimensionError("lambda_1 must not exceed ell");
    if (zmax < lambda.size()) throw DimensionError("zmax must be at least |lambda|");
    const ZSeries l = moment_series(&lambda, ell, zmax);
    SideTable t{{"#u", "z"}, {}, {}};
    for (int k = lambda.size() + 1; k <= zmax; ++k) {
        if (!l.coeff_at(k).is_zero()) t.lhs[{0, k}] = l.coeff_at(k);
    }
    for (int u = 1; u <= umax; ++u) {
        UniRat down, up;
        for (int k = 0; k <= lambda.size(); ++k) {
            down += l.coeff_at(k) * qpow(-static_cast<long>(u) * k);
            up += l.coeff_at(k) * qpow(static_cast<long>(u) * k);
        }
        const UniRat rhs = qpow(-static_cast<long>(u) * lambda.size()) * up;
        if (!down.is_zero()) t.lhs[{u, 0}] = down;
        if (!rhs.is_zero()) t.rhs[{u, 0}] = rhs;
    }
    return t;
}

Names xy_names(int n, bool with_y) {
    Names names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    if (with_y) {
        for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    }
    return names;
}

SideTable qbinhl(const CaseParams& p) {
    const int n = require(p.alphabet, "alphabet");
    const int d = require(p.degree, "degree");
    Names names = xy_names(n, false);
    names.push_back("a");
    std::vector<int> w(n, 1);
    w.push_back(0);
    RatPoly lhs(names);
    for (const auto& lambda : partitions_up_to(d, std::nullopt, n)) {
        const RatPoly hl = embed(hl_p(lambda, n).poly, names, 0);
        lhs += (hl * a_poch(names, n, lambda.length())).scaled(qpow(nstat(lambda)));
    }
    RatPoly rhs = RatPoly::constant(names, UniRat(1));
    for (int i = 0; i < n; ++i) {
        const RatPoly f = one_minus(names, unit(names.size(), {{n, 1}, {i, 1}}), UniRat(1));
        rhs = rhs.truncated_mul(f.truncated_mul(geometric(names, unit(names.size(), {{i, 1}}), UniRat(1), d), w, d),
                                w, d);
    }
    SideTable t{names, {}, {}};
    put_poly(t.lhs, lhs);
    put_poly(t.rhs, rhs);
    return t;
}

SideTable warnaar(const CaseParams& p) {
    const int n = require(p.alphabet, "alphabet");
    const int d = require(p.degree, "degree");
    const Names names = xy_names(n, true);
    const std::vector<int> w(names.size(), 1);
    RatPoly lhs(names);
    const auto parts = partitions_up_to(d, std::nullopt, n);
    for (const auto& lambda : parts) {
        const RatPoly pl = embed(hl_p(lambda, n).poly, names, 0);
        for (const auto& mu : parts) {
            if (lambda.size() + mu.size() > d) continue;
            const long e = nstat(lambda) + nstat(mu) - dot_product_conjugates(lambda, mu);
            lhs += (pl * embed(hl_p(mu, n).poly, names, n)).scaled(qpow(e));
        }
    }
    RatPoly rhs = RatPoly::constant(names, UniRat(1));
    for (int i = 0; i < 2 * n; ++i) {
        rhs = rhs.truncated_mul(geometric(names, unit(names.size(), {{i, 1}}), UniRat(1), d), w, d);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Key xy = unit(names.size(), {{i, 1}, {n + j, 1}});
            const RatPoly f = one_minus(names, xy, UniRat(1)).truncated_mul(geometric(names, xy, qpow(-1), d / 2), w, d);
            rhs = rhs.truncated_mul(f, w, d);
        }
    }
    SideTable t{names, {}, {}};
    put_poly(t.lhs, lhs);
    put_poly(t.rhs, rhs);
    return t;
}

SideTable lascoux(const CaseParams& p) {
    const int n = require(p.alphabet, "alphabet");
    const int d = require(p.degree, "degree");
    if (p.specialize_y) {
        // y = z, zq, zq^2, ...: P_mu(y) becomes its principal specialization.
        Names names = xy_names(n, false);
        names.push_back("z");
        std::vector<int> w(n, 1);
        w.push_back(0);
        RatPoly lhs(names);
        for (const auto& lambda : partitions_up_to(d, std::nullopt, n)) {
            const RatPoly pl = embed(hl_p(lambda, n).poly, names, 0);
            RatPoly inner(names);
            for (const auto& mu : subpartitions(lambda)) {
                const PrincipalValue pv = principal_spec_closed(mu, std::nullopt);
                inner.add_term(unit(names.size(), {{n, pv.zpow}}), pv.coeff * b_lambda(mu) * qprime_skew(lambda, mu));
            }
            lhs += pl * inner;
        }
        RatPoly rhs = RatPoly::constant(names, UniRat(1));
        for (int i = 0; i < n; ++i) {
            rhs = rhs.truncated_mul(geometric(names, unit(names.size(), {{i, 1}}), UniRat(1), d), w, d);
            rhs = rhs.truncated_mul(geometric(names, unit(names.size(), {{i, 1}, {n, 1}}), UniRat(1), d), w, d);
        }
        SideTable t{names, {}, {}};
        put_poly(t.lhs, lhs);
        put_poly(t.rhs, rhs);
        return t;
    }
    const Names names = xy_names(n, true);
    const std::vector<int> w(names.size(), 1);
    RatPoly lhs(names);
    for (const auto& lambda : partitions_up_to(d, std::nullopt, n)) {
        const RatPoly pl = embed(hl_p(lambda, n).poly, names, 0);
        for (const auto& mu : subpartitions(lambda)) {
            if (lambda.size() + mu.size() > d) continue;
            lhs += (pl * embed(hl_p(mu, n).poly, names, n)).scaled(b_lambda(mu) * qprime_skew(lambda, mu));
        }
    }
    RatPoly rhs = RatPoly::constant(names, UniRat(1));
    for (int i = 0; i < n; ++i) {
        rhs = rhs.truncated_mul(geometric(names, unit(names.size(), {{i, 1}}), UniRat(1), d), w, d);
    }
    const UniRat q = UniRat::param('q');
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Key xy = unit(names.size(), {{i, 1}, {n + j, 1}});
            const RatPoly f = one_minus(names, xy, q).truncated_mul(geometric(names, xy, UniRat(1), d / 2), w, d);
            rhs = rhs.truncated_mul(f, w, d);
        }
    }
    SideTable t{names, {}, {}};
    put_poly(t.lhs, lhs);
    put_poly(t.rhs, rhs);
    return t;
}

/// Sign and leftover Vandermonde after cancelling the cross-block factors x_i - x_j (i in I, j not in I).
RatPoly block_vandermonde(const Names& names, int n, unsigned mask, int* sign) {
    RatPoly v = RatPoly::constant(names, UniRat(1));
    *sign = 1;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const bool ia = mask >> a & 1U, ib = mask >> b & 1U;
            if (ia == ib) {
                RatPoly f = RatPoly::variable(names, a);
                f -= RatPoly::variable(names, b);
                v *= f;
            } else if (!ia) {
                *sign = -*sign;
            }
        }
    }
    return v;
}

SideTable finite_symbolic(int n, int k) {
    Names names = xy_names(n, false);
    names.push_back("a");
    const std::size_t nv = names.size();
    // Common denominator: Vandermonde times prod_i prod_{t<n} (1 - x_i q^t).
    RatPoly vdm = RatPoly::constant(names, UniRat(1));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            RatPoly f = RatPoly::variable(names, a);
            f -= RatPoly::variable(names, b);
            vdm *= f;
        }
    }
    RatPoly den = vdm;
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < n; ++t) den *= one_minus(names, unit(nv, {{i, 1}}), qpow(t));
    }
    RatPoly lhs(names);
    for (const auto& lambda : partitions_in_box(n, k)) {
        const RatPoly hl = embed(hl_p(lambda, n).poly, names, 0);
        lhs += (hl * a_poch(names, n, lambda.length()) * a_poch(names, n, n - lambda.multiplicity(k)))
                   .scaled(qpow(nstat(lambda)));
    }
    lhs *= den;

    RatPoly rhs(names);
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        const int r = __builtin_popcount(mask);
        int sign = 1;
        RatPoly term = block_vandermonde(names, n, mask, &sign);
        // 1/(x_i - q^{1-r}) = -q^{r-1} / (1 - x_i q^{r-1}).
        UniRat c = qpow(static_cast<long>(k) * choose2(r)) * UniRat(static_cast<long>(sign)) *
                   (qpow(r - 1) * UniRat(-1L)).pow(r);
        term *= a_poch(names, n, r) * a_poch(names, n, n - r);
        for (int i = 0; i < n; ++i) {
            const bool in = mask >> i & 1U;
            if (in) {
                RatPoly f = RatPoly::variable(names, i);
                f -= RatPoly::variable(names, n, qpow(1 - n));
                term *= f * RatPoly::term(names, unit(nv, {{i, k}}), UniRat(1));
            } else {
                term *= one_minus(names, unit(nv, {{n, 1}, {i, 1}}), UniRat(1));
            }
            const int skip = in ? r - 1 : r;
            for (int t = 0; t < n; ++t) {
                if (t != skip) term *= one_minus(names, unit(nv, {{i, 1}}), qpow(t));
            }
            for (int j = 0; j < n; ++j) {
                if (in && !(mask >> j & 1U)) {
                    RatPoly f = RatPoly::variable(names, i);
                    f -= RatPoly::variable(names, j, UniRat::param('q'));
                    term *= f;
                }
            }
        }
        rhs += term.scaled(c);
    }
    SideTable t{names, {}, {}};
    put_poly(t.lhs, lhs);
    put_poly(t.rhs, rhs);
    return t;
}

std::vector<mpq_class> sample_point(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-24, 24), den(1, 9);
    std::set<mpq_class> seen;
    std::vector<mpq_class> x;
    while (static_cast<int>(x.size()) < n) {
        mpq_class v(num(rng), den(rng));
        v.canonicalize();
        if (v == 0 || v == 1 || !seen.insert(v).second) continue;
        x.push_back(v);
    }
    return x;
}

SideTable finite_random(int n, int k, int samples, std::uint64_t seed) {
    const Names names{"a"};
    const UniRat q = UniRat::param('q');
    std::mt19937_64 rng(seed);
    SideTable t{{"#sample", "a"}, {}, {}};
    const auto box = partitions_in_box(n, k);
    for (int s = 0; s < samples; ++s) {
        const std::vector<mpq_class> xq = sample_point(n, rng);
        std::vector<UniRat> x(xq.begin(), xq.end());
        RatPoly lhs(names);
        for (const auto& lambda : box) {
            const UniRat hl = hl_evaluate(lambda, x);
            lhs += (a_poch(names, 0, lambda.length()) * a_poch(names, 0, n - lambda.multiplicity(k)))
                       .scaled(hl * qpow(nstat(lambda)));
        }
        RatPoly rhs(names);
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            const int r = __builtin_popcount(mask);
            RatPoly term = (a_poch(names, 0, r) * a_poch(names, 0, n - r)).scaled(qpow(static_cast<long>(k) * choose2(r)));
            for (int i = 0; i < n; ++i) {
                if (mask >> i & 1U) {
                    RatPoly f = RatPoly::constant(names, x[i]);
                    f -= RatPoly::variable(names, 0, qpow(1 - n));
                    term *= f.scaled(x[i].pow(k) / (x[i] - qpow(1 - r)));
                    for (int j = 0; j < n; ++j) {
                        if (!(mask >> j & 1U)) term = term.scaled((x[i] - q * x[j]) / (x[i] - x[j]));
                    }
                } else {
                    term *= one_minus(names, {1}, x[i]).scaled((UniRat(1) - x[i] * qpow(r)).inverse());
                }
            }
            rhs += term;
        }
        for (const auto& [e, c] : lhs.terms()) t.lhs[{s, e[0]}] = c;
        for (const auto& [e, c] : rhs.terms()) t.rhs[{s, e[0]}] = c;
    }
    return t;
}

SideTable csq(const CaseParams& p) {
    const int n = require(p.n, "n");
    const int k = require(p.k, "k");
    const Names names{"z", "a"};
    auto zq = [&](int t) { return one_minus(names, {1, 0}, qpow(t)); };
    // Common denominator prod_{t=-1}^{2n-1} (1 - z q^t).
    RatPoly den = RatPoly::constant(names, UniRat(1));
    for (int t = -1; t <= 2 * n - 1; ++t) den *= zq(t);

    RatPoly lhs(names);
    for (const auto& lambda : partitions_in_box(n, k)) {
        const int l = lambda.length();
        const UniRat c = qpow(2 * nstat(lambda)) * qfac(n) / (qfac(n - l) * b_lambda(lambda));
        lhs += (a_poch(names, 1, l) * a_poch(names, 1, n - lambda.multiplicity(k)))
                   * RatPoly::term(names, {lambda.size(), 0}, c);
    }
    lhs *= den;

    RatPoly rhs(names);
    for (int r = 0; r <= n; ++r) {
        const UniRat c = UniRat(r % 2 ? -1L : 1L) * qpow((2L * k + 3) * choose2(r)) *
                         qpochhammer(UniRat(1), n - r + 1, r) / qfac(r);
        RatPoly term = RatPoly::term(names, {(k + 1) * r, 0}, c);
        term *= zq(2 * r - 1);
        for (int i = 0; i < n - r; ++i) term *= one_minus(names, {1, 1}, qpow(r + i));
        term *= a_poch(names, 1, r) * a_poch(names, 1, n - r);
        for (int i = 0; i < r; ++i) term *= one_minus(names, {-1, 1}, qpow(1 - n - i));
        for (int t = -1; t <= 2 * n - 1; ++t) {
            if (t < r - 1 || t > r + n - 1) term *= zq(t);
        }
        rhs += term;
    }
    SideTable t{names, {}, {}};
    put_poly(t.lhs, lhs);
    put_poly(t.rhs, rhs);
    return t;
}

} // namespace

SideTable build_sides(const IdentityCase& c) {
    const CaseParams& p = c.params;
    switch (c.id) {
    case IdentityId::QBIN: return qbin(p);
    case IdentityId::EULER: return euler(p);
    case IdentityId::GENFUN: return genfun(p);
    case IdentityId::COMBINAT: return combinat(p);
    case IdentityId::UMOY_ABELIAN: return umoy_abelian(p);
    case IdentityId::UMOY_TYPE_S: return umoy_type_s(p);
    case IdentityId::DELAUNAY: return row_case(p);
    case IdentityId::QBINHL: return qbinhl(p);
    case IdentityId::WARNAAR_A2: return warnaar(p);
    case IdentityId::LASCOUX: return lascoux(p);
    case IdentityId::FINITE_QBINHL: {
        const int n = require(p.n, "n");
        const int k = require(p.k, "k");
        if (c.strategy == Strategy::RandomPoint) return finite_random(n, k, p.samples.value_or(20), c.seed);
        return finite_symbolic(n, k);
    }
    case IdentityId::CSQ: return csq(p);
    case IdentityId::MIRROR_SWAP: return mirror_swap(p);
    }
    throw std::logic_error("unhandled identity id");
}

std::string render_key(const std::vector<std::string>& axis, const std::vector<int>& key) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < axis.size() && i < key.size(); ++i) {
        const std::string& name = axis[i];
        if (!name.empty() && name[0] == '#') {
            os << (first ? "" : "*") << name.substr(1) << '=' << key[i];
            first = false;
            continue;
        }
        if (key[i] == 0) continue;
        os << (first ? "" : "*") << name;
        if (key[i] != 1) os << '^' << key[i];
        first = false;
    }
    return first ? std::string("1") : os.str();
}

} // namespace ptorsion::detail
