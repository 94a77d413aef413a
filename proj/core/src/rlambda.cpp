#include "ptorsion/rlambda.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "ptorsion/errors.hpp"
#include "ptorsion/qseries.hpp"

namespace ptorsion {

namespace {

constexpr char kT = 't';
constexpr char kQ = 'q';

// Linear factor x_i - t^j x_{i-1}, with x_0 = 1.
RatPoly root_factor(const std::vector<std::string>& names, int i, int j) {
    RatPoly f = RatPoly::variable(names, i - 1);
    const UniRat tj = UniRat::monomial(1, j, kT);
    if (i == 1) {
        f -= RatPoly::constant(names, tj);
    } else {
        f -= RatPoly::variable(names, i - 2, tj);
    }
    return f;
}

RatPoly product_form(const Partition& lambda, int ell, const std::vector<std::string>& names) {
    RatPoly r = RatPoly::constant(names, UniRat(1));
    for (int i = 1; i <= ell; ++i) {
        for (int j = lambda.conj_part(i + 1); j <= lambda.conj_part(i) - 1; ++j) {
            r *= root_factor(names, i, j);
        }
    }
    return r;
}

RatPoly multiplicity_form(const Partition& lambda, int ell, const std::vector<std::string>& names) {
    // x_i^{m_i} (t^{m_{i+1}+...+m_ell} x_{i-1}/x_i; t)_{m_i}: each factor x_i(1 - t^{s+k} x_{i-1}/x_i).
    RatPoly r = RatPoly::constant(names, UniRat(1));
    for (int i = 1; i <= ell; ++i) {
        int tail = 0;
        for (int k = i + 1; k <= ell; ++k) tail += lambda.multiplicity(k);
        const int mi = lambda.multiplicity(i);
        for (int k = 0; k < mi; ++k) {
            RatPoly f = RatPoly::variable(names, i - 1);
            const UniRat coef = UniRat::monomial(1, tail + k, kT);
            f -= (i == 1) ? RatPoly::constant(names, coef) : RatPoly::variable(names, i - 2, coef);
            r *= f;
        }
    }
    return r;
}

std::vector<std::string> x_names(int ell) { return RatPoly::in_x(ell).names(); }

} // namespace

std::vector<int> monomial_exponent(const Partition& mu, int ell) {
    if (mu.largest() > ell) {
        throw DimensionError("monomial x^mu needs at least mu_1 = " + std::to_string(mu.largest()) +
                             " variables, got " + std::to_string(ell));
    }
    std::vector<int> e(ell, 0);
    for (int i = 1; i <= ell; ++i) e[i - 1] = mu.multiplicity(i);
    return e;
}

RatPoly rlambda_poly(const Partition& lambda, std::optional<int> ell_opt) {
    const int ell = ell_opt.value_or(lambda.largest());
    if (lambda.largest() > ell) {
        throw DimensionError("R_lambda needs ell >= lambda_1 = " + std::to_string(lambda.largest()) +
                             ", got ell = " + std::to_string(ell));
    }
    const auto names = x_names(ell);
    RatPoly a = product_form(lambda, ell, names);
    RatPoly b = multiplicity_form(lambda, ell, names);
    if (a != b) throw std::logic_error("R_lambda product and multiplicity forms disagree");
    return a;
}

RExpansion rlambda_expand(const Partition& lambda) {
    RExpansion out{lambda, ExpansionDirection::RToMonomial, {}};
    const int ell = lambda.largest();
    for (const Partition& mu : subpartitions(lambda)) {
        long tpow = 0;
        for (int i = 1; i <= ell; ++i) tpow += choose2(lambda.conj_part(i) - mu.conj_part(i));
        for (int i = 2; i <= ell; ++i) {
            tpow += static_cast<long>(lambda.conj_part(i)) * (lambda.conj_part(i - 1) - mu.conj_part(i - 1));
        }
        UniRat c = UniRat::monomial((lambda.size() - mu.size()) % 2 == 0 ? 1 : -1, static_cast<int>(tpow), kT);
        for (int i = 1; i <= ell && !c.is_zero(); ++i) {
            c *= qbinomial(lambda.conj_part(i) - lambda.conj_part(i + 1),
                           lambda.conj_part(i) - mu.conj_part(i))
                     .renamed(kT);
        }
        if (!c.is_zero()) out.coeffs.emplace(mu, std::move(c));
    }
    if (to_mpoly(out, ell) != rlambda_poly(lambda, ell)) {
        throw std::logic_error("closed-form expansion of R_lambda disagrees with its product form");
    }
    return out;
}

RatPoly to_mpoly(const RExpansion& e, int ell) {
    const auto names = x_names(ell);
    RatPoly r(names);
    if (e.direction == ExpansionDirection::RToMonomial) {
        for (const auto& [mu, c] : e.coeffs) r.add_term(monomial_exponent(mu, ell), c);
        return r;
    }
    for (const auto& [mu, c] : e.coeffs) {
        r += rlambda_poly(mu, ell).scaled(c.renamed(kT));
    }
    return r;
}

const UniRat& c_coeff(const Partition& lambda, const Partition& mu) {
    static const UniRat zero;
    if (!contains(lambda, mu)) return zero;
    static std::mutex m;
    static std::map<std::pair<Partition, Partition>, UniRat> memo;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = memo.find({lambda, mu});
        if (it != memo.end()) return it->second;
    }
    const int ell = lambda.largest();
    long qpow = 0;
    for (int i = 1; i <= ell; ++i) {
        qpow += static_cast<long>(mu.conj_part(i + 1)) * (lambda.conj_part(i) - mu.conj_part(i));
    }
    UniRat c = UniRat::monomial(1, static_cast<int>(qpow), kQ);
    for (int i = 1; i <= ell; ++i) {
        c *= qbinomial(lambda.conj_part(i) - mu.conj_part(i + 1), lambda.conj_part(i) - mu.conj_part(i));
    }
    if (!c.has_nonnegative_integer_coeffs()) {
        throw std::logic_error("C_{lambda,mu} is not a polynomial with nonnegative coefficients");
    }
    std::lock_guard<std::mutex> lock(m);
    return memo.emplace(std::make_pair(lambda, mu), std::move(c)).first->second;
}

RExpansion monomial_in_R_basis(const Partition& lambda) {
    RExpansion out{lambda, ExpansionDirection::MonomialToR, {}};
    for (const Partition& mu : subpartitions(lambda)) {
        const UniRat& c = c_coeff(lambda, mu);
        if (!c.is_zero()) out.coeffs.emplace(mu, c);
    }
    return out;
}

MirrorPoly mirror_poly(const Partition& lambda) {
    MirrorPoly out;
    out.coeffs.assign(lambda.size() + 1, UniRat());
    for (const Partition& mu : subpartitions(lambda)) out.coeffs[mu.size()] += c_coeff(lambda, mu);
    out.palindromic = true;
    for (int k = 0; k <= lambda.size(); ++k) {
        if (out.coeffs[k] != out.coeffs[lambda.size() - k]) out.palindromic = false;
    }
    return out;
}

long dot_product_conjugates(const Partition& lambda, const Partition& mu) {
    long s = 0;
    const int n = std::min(lambda.largest(), mu.largest());
    for (int i = 1; i <= n; ++i) s += static_cast<long>(lambda.conj_part(i)) * mu.conj_part(i);
    return s;
}

UniRat qprime_skew(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) return UniRat();
    const long e = mu.size() + nstat(lambda) + nstat(mu) - dot_product_conjugates(lambda, mu);
    UniRat r = UniRat::monomial(1, static_cast<int>(e), kQ);
    for (int i = 1; i <= lambda.largest(); ++i) {
        r *= qbinomial(lambda.conj_part(i) - mu.conj_part(i + 1), lambda.conj_part(i) - mu.conj_part(i));
    }
#ifndef NDEBUG
    if (!c_qprime_relation_holds(lambda, mu)) {
        throw std::logic_error("C(1/q) and Q' relation fails");
    }
#endif
    return r;
}

bool c_qprime_relation_holds(const Partition& lambda, const Partition& mu) {
    if (!contains(lambda, mu)) return c_coeff(lambda, mu).is_zero();
    const long e = mu.size() + nstat(lambda) + nstat(mu) - dot_product_conjugates(lambda, mu);
    UniRat qp = UniRat::monomial(1, static_cast<int>(e), kQ);
    for (int i = 1; i <= lambda.largest(); ++i) {
        qp *= qbinomial(lambda.conj_part(i) - mu.conj_part(i + 1), lambda.conj_part(i) - mu.conj_part(i));
    }
    const UniRat lhs = c_coeff(lambda, mu).substitute_power(-1);
    const UniRat rhs = qp.shifted(static_cast<int>(nstat(mu) - nstat(lambda)));
    return lhs == rhs;
}

} // namespace ptorsion
