#include "ptorsion/moments.hpp"

#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "ptorsion/errors.hpp"
#include "ptorsion/qseries.hpp"
#include "ptorsion/rlambda.hpp"

namespace ptorsion {

namespace {

mpq_class qpow(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? mpq_class(r) : mpq_class(1, r);
}

long integral_u(const MomentQuery& q) {
    if (q.u < 0) throw std::invalid_argument("u must be nonnegative");
    if (q.u.get_den() != 1) {
        throw ModeError("exact moments need integral u, got " + q.u.get_str() + "; use the floating entry point");
    }
    return q.u.get_num().get_si();
}

void require_prime(long p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

mpq_class c_at(const Partition& lambda, const Partition& mu, long base) {
    return c_coeff(lambda, mu).evaluate(mpq_class(base));
}

BigFloat big(const mpq_class& v) {
    return BigFloat(v.get_num().get_str()) / BigFloat(v.get_den().get_str());
}

} // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

mpq_class m_u(const MomentQuery& query) {
    require_prime(query.p);
    const long u = integral_u(query);
    mpq_class total = 0;
    for (const Partition& mu : subpartitions(query.lambda)) {
        total += c_at(query.lambda, mu, query.p) * qpow(query.p, -static_cast<long>(mu.size()) * u);
    }
    return total;
}

mpq_class m_u_s(const MomentQuery& query) {
    require_prime(query.p);
    const long u = integral_u(query);
    mpq_class total = 0;
    for (const Partition& mu : subpartitions(query.lambda)) {
        total += c_at(query.lambda, mu, query.p * query.p) * qpow(query.p, -static_cast<long>(mu.size()) * (2 * u - 1));
    }
    if (query.lambda.length() == 1) {
        mpq_class geometric = 0;
        for (int k = 0; k <= query.lambda.size(); ++k) geometric += qpow(query.p, -static_cast<long>(k) * (2 * u - 1));
        if (geometric != total) throw std::logic_error("type-S row moment differs from its geometric form");
    }
    return total;
}

mpq_class moment(const MomentQuery& query) {
    return query.flavor == Flavor::Abelian ? m_u(query) : m_u_s(query);
}

BigFloat moment_float(const Partition& lambda, long p, const BigFloat& u, Flavor flavor) {
    require_prime(p);
    if (u < 0) throw std::invalid_argument("u must be nonnegative");
    const long base = flavor == Flavor::Abelian ? p : p * p;
    const BigFloat exponent = flavor == Flavor::Abelian ? u : 2 * u - 1;
    BigFloat total = 0;
    for (const Partition& mu : subpartitions(lambda)) {
        total += big(c_at(lambda, mu, base)) * boost::multiprecision::pow(BigFloat(p), -exponent * mu.size());
    }
    return total;
}

CoherenceReport coherence_check(const Partition& lambda, long p) {
    CoherenceReport r;
    r.m0_s = m_u_s({lambda, p, 0, Flavor::TypeS});
    r.m1_s_scaled = m_u_s({lambda, p, 1, Flavor::TypeS}) * qpow(p, lambda.size());
    r.pass = (r.m0_s == r.m1_s_scaled);
    return r;
}

RankProbability pj_rank_prob(const RankProfile& profile, Flavor flavor) {
    require_prime(profile.p);
    if (profile.truncation < 1) throw std::invalid_argument("rank law truncation must be at least 1");
    if (profile.u < 0) throw std::invalid_argument("u must be nonnegative");
    const auto& mu = profile.mu;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0 || (i > 0 && mu[i] > mu[i - 1])) throw std::invalid_argument("rank profile must be decreasing");
    }
    const long p = profile.p;
    const long u = profile.u;
    const bool s = (flavor == Flavor::TypeS);
    long sum_sq = 0, sum = 0;
    for (int m : mu) {
        sum_sq += static_cast<long>(m) * m;
        sum += m;
    }
    const long ell_last = mu.empty() ? 0 : mu.back();
    // e_j: exponent in the factor 1 - p^{-e_j} of the infinite product.
    auto e_of = [&](long j) { return s ? 2 * u + 2 * j - 1 : u + j; };

    mpq_class denom = s ? qpow(p, 2 * sum_sq + (2 * u - 1) * sum) : qpow(p, sum_sq + u * sum);
    for (std::size_t j = 0; j < mu.size(); ++j) {
        const int diff = mu[j] - (j + 1 < mu.size() ? mu[j + 1] : 0);
        const long base_exp = s ? 2 : 1;
        mpq_class poch = 1;
        for (int k = 1; k <= diff; ++k) poch *= 1 - qpow(p, -base_exp * k);
        denom *= poch;
    }
    // prod_{j > mu_ell} = prod_{j >= 1} / prod_{j=1}^{mu_ell}; the first ratio factor is exact.
    mpq_class head = 1;
    for (long j = 1; j <= ell_last; ++j) head *= 1 - qpow(p, -e_of(j));
    RankProbability r;
    r.exact_factor = 1 / (denom * head);
    r.exact_factor.canonicalize();
    BigFloat prod = 1;
    const BigFloat bp(p);
    for (long j = 1; j <= profile.truncation; ++j) prod *= 1 - boost::multiprecision::pow(bp, -BigFloat(e_of(j)));
    r.residual = prod;
    // sum_{j > J} p^{-e_j}: geometric with ratio p^{-1} (abelian) or p^{-2} (type S).
    const long J = profile.truncation;
    r.error_bound = s ? boost::multiprecision::pow(bp, -BigFloat(e_of(J + 1))) / (1 - 1 / (bp * bp))
                      : boost::multiprecision::pow(bp, -BigFloat(e_of(J + 1))) / (1 - 1 / bp);
    return r;
}

NormalizationReport rank_law_normalization(long p, long u, int ell, int bound, Flavor flavor, int truncation) {
    NormalizationReport rep;
    rep.total = 0;
    rep.certified_error = 0;
    std::vector<int> mu(ell, 0);
    std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i == ell) {
            RankProbability r = pj_rank_prob({mu, p, u, truncation}, flavor);
            rep.total += r.value();
            rep.certified_error += big(r.exact_factor) * r.error_bound;
            ++rep.profiles;
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            mu[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, bound);
    return rep;
}

std::string to_string(ConjectureKind kind) {
    switch (kind) {
        case ConjectureKind::ClassGroupImaginary: return "class-imaginary";
        case ConjectureKind::ClassGroupReal: return "class-real";
        case ConjectureKind::Sha: return "sha";
        case ConjectureKind::Selmer: return "selmer";
    }
    return "unknown";
}

ConjectureValue conjecture_table(ConjectureKind kind, const Partition& lambda, long p, long u, int ell, int m) {
    require_prime(p);
    ConjectureValue v{kind, 0, true, false, ""};
    switch (kind) {
        case ConjectureKind::ClassGroupImaginary:
            v.value = m_u({lambda, p, 0, Flavor::Abelian});
            v.out_of_stated_range = (p == 2);
            v.label = "conjectural average over imaginary quadratic fields";
            break;
        case ConjectureKind::ClassGroupReal:
            v.value = m_u({lambda, p, 1, Flavor::Abelian});
            v.out_of_stated_range = (p == 2);
            v.label = "conjectural average over real quadratic fields";
            break;
        case ConjectureKind::Sha:
            v.value = m_u_s({lambda, p, u, Flavor::TypeS});
            v.label = "conjectural average over elliptic curves of rank " + std::to_string(u);
            break;
        case ConjectureKind::Selmer: {
            if (ell < 1 || m < 0) throw std::invalid_argument("selmer needs ell >= 1 and m >= 0");
            const Partition box(std::vector<int>(m, ell));
            mpq_class total = 0;
            for (const Partition& mu : subpartitions(box)) total += c_at(box, mu, p * p) * qpow(p, mu.size());
            if (ell == 1) {
                mpq_class product = 1;
                for (int j = 1; j <= m; ++j) product *= 1 + qpow(p, j);
                if (product != total) throw std::logic_error("Selmer moment differs from the product formula");
            }
            v.value = total;
            v.label = "conjectural average of |Sel_{p^" + std::to_string(ell) + "}|^" + std::to_string(m);
            break;
        }
    }
    return v;
}

mpq_class fouvry_klueners_numbers(int n, long p, bool real) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    require_prime(p);
    mpq_class total = 0;
    for (int k = 0; k <= n; ++k) {
        mpq_class term(qbinomial_at(n, k, p));
        if (real) term *= qpow(p, -k);
        total += term;
    }
    const Partition column(std::vector<int>(n, 1));
    if (total != m_u({column, p, real ? 1 : 0, Flavor::Abelian})) {
        throw std::logic_error("q-binomial moment sum differs from the general moment");
    }
    return total;
}

std::string to_decimal(const mpq_class& v, int digits) {
    std::ostringstream out;
    out << std::setprecision(digits) << big(v);
    return out.str();
}

} // namespace ptorsion
