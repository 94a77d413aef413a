#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <string>
#include <vector>

#include "ptorsion/partition.hpp"

namespace ptorsion {

using BigFloat = boost::multiprecision::cpp_dec_float_50;

enum class Flavor { Abelian, TypeS };

/// Moment of x^lambda = prod_i |H[p^i]|^{m_i} at damping u >= 0.
struct MomentQuery {
    Partition lambda;
    long p = 2;
    mpq_class u = 0;
    Flavor flavor = Flavor::Abelian;
};

bool is_prime(long n);

/// sum_{mu in lambda} C_{lambda,mu}(p) p^{-|mu| u}. Throws ModeError for non-integral u.
mpq_class m_u(const MomentQuery& query);
/// sum_{mu in lambda} C_{lambda,mu}(p^2) p^{-|mu|(2u-1)}. Throws ModeError for non-integral u.
mpq_class m_u_s(const MomentQuery& query);
/// Dispatches on query.flavor.
mpq_class moment(const MomentQuery& query);

/// Floating entry point for any real u >= 0, evaluated in 50 significant digits.
BigFloat moment_float(const Partition& lambda, long p, const BigFloat& u, Flavor flavor);

struct CoherenceReport {
    bool pass = false;
    mpq_class m0_s;        // M_0^S(x^lambda)
    mpq_class m1_s_scaled; // M_1^S(x^lambda) * p^{|lambda|}
};

CoherenceReport coherence_check(const Partition& lambda, long p);

/// Prescribed p^j-ranks mu_1 >= ... >= mu_ell >= 0 (trailing zeros allowed).
struct RankProfile {
    std::vector<int> mu;
    long p = 2;
    long u = 0;
    int truncation = 64;  // factors kept in the residual infinite product
};

struct RankProbability {
    mpq_class exact_factor;
    BigFloat residual;     // truncated prod_{j>=1} (1 - p^{-e_j})
    BigFloat error_bound;  // |residual - infinite product| <= error_bound
    BigFloat value() const {
        return BigFloat(exact_factor.get_num().get_str()) / BigFloat(exact_factor.get_den().get_str()) * residual;
    }
};

/// Probability that the p^j-ranks equal mu_j (abelian) or 2 mu_j (type S).
RankProbability pj_rank_prob(const RankProfile& profile, Flavor flavor);

struct NormalizationReport {
    BigFloat total;
    BigFloat certified_error;  // residual truncation error summed over profiles
    std::size_t profiles = 0;
};

/// Sum of pj_rank_prob over all profiles of length ell with mu_1 <= bound.
NormalizationReport rank_law_normalization(long p, long u, int ell, int bound, Flavor flavor, int truncation = 64);

enum class ConjectureKind { ClassGroupImaginary, ClassGroupReal, Sha, Selmer };

struct ConjectureValue {
    ConjectureKind kind;
    mpq_class value;
    bool conjectural = true;
    bool out_of_stated_range = false;  // class-group kinds at p = 2
    std::string label;
};

/// lambda is used by the class-group and Sha kinds; (ell, m) by Selmer; u by Sha.
ConjectureValue conjecture_table(ConjectureKind kind, const Partition& lambda, long p, long u = 0, int ell = 1,
                                 int m = 0);

std::string to_string(ConjectureKind kind);

/// Average of |cl(d)[p]|^n: sum_k [n k]_p, or sum_k [n k]_p p^{-k} for real fields.
mpq_class fouvry_klueners_numbers(int n, long p, bool real);

/// Renders a rational in 50-digit decimal.
std::string to_decimal(const mpq_class& v, int digits = 20);

} // namespace ptorsion
