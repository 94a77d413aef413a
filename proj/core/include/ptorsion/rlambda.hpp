#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ptorsion/mpoly.hpp"
#include "ptorsion/partition.hpp"
#include "ptorsion/unirat.hpp"

namespace ptorsion {

enum class ExpansionDirection { MonomialToR, RToMonomial };

/// Coefficients indexed by partitions mu contained in lambda.
///   MonomialToR: x^lambda = sum_mu coeffs[mu] R_mu, coefficients in q.
///   RToMonomial: R_lambda = sum_mu coeffs[mu] x^mu, coefficients in t.
struct RExpansion {
    Partition lambda;
    ExpansionDirection direction = ExpansionDirection::RToMonomial;
    std::map<Partition, UniRat> coeffs;
};

/// Exponent vector of x^mu = x_1^{m_1} ... x_ell^{m_ell}. Requires mu_1 <= ell.
std::vector<int> monomial_exponent(const Partition& mu, int ell);

/// R_lambda(x; t) in x_1..x_ell, from the root-product form and the
/// multiplicity form; throws std::logic_error if they differ.
/// ell defaults to lambda_1; throws DimensionError when lambda_1 > ell.
RatPoly rlambda_poly(const Partition& lambda, std::optional<int> ell = std::nullopt);

/// Closed-form monomial expansion of R_lambda, cross-checked against rlambda_poly.
RExpansion rlambda_expand(const Partition& lambda);

/// The expansion as a polynomial in x_1..x_ell (ell >= lambda_1).
RatPoly to_mpoly(const RExpansion& e, int ell);

/// Inversion coefficient C_{lambda,mu}(q); zero when mu is not contained in lambda.
const UniRat& c_coeff(const Partition& lambda, const Partition& mu);

/// All mu contained in lambda with C_{lambda,mu}(q).
RExpansion monomial_in_R_basis(const Partition& lambda);

struct MirrorPoly {
    std::vector<UniRat> coeffs;  // coefficient of T^k, k = 0..|lambda|
    bool palindromic = false;
};

MirrorPoly mirror_poly(const Partition& lambda);

/// Skew coefficient Q'_{lambda/mu}(1; q); zero when mu is not contained in lambda.
UniRat qprime_skew(const Partition& lambda, const Partition& mu);

/// C_{lambda,mu}(1/q) = q^{n(mu)-n(lambda)} Q'_{lambda/mu}(1; q).
bool c_qprime_relation_holds(const Partition& lambda, const Partition& mu);

/// (lambda' | mu') = sum_i lambda'_i mu'_i.
long dot_product_conjugates(const Partition& lambda, const Partition& mu);

} // namespace ptorsion
