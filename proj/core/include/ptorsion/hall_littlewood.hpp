#pragma once

#include <optional>

#include "ptorsion/mpoly.hpp"
#include "ptorsion/partition.hpp"
#include "ptorsion/unirat.hpp"

namespace ptorsion {

/// Largest alphabet hl_p accepts.
inline constexpr int kMaxHLAlphabet = 5;

/// P_lambda(x_1..x_n; q). Symmetric, homogeneous of degree |lambda|, zero when l(lambda) > n.
struct HLValue {
    Partition lambda;
    int n = 0;
    RatPoly poly;
};

/// Throws ResourceLimitError when n > kMaxHLAlphabet. Results are cached.
const HLValue& hl_p(const Partition& lambda, int n);

/// b_lambda(q) = prod_i (q; q)_{m_i(lambda)}.
UniRat b_lambda(const Partition& lambda);

/// P_lambda(z, zq, ..., zq^{n-1}; q) = z^{zpow} * coeff. n absent means infinitely many variables.
struct PrincipalValue {
    int zpow = 0;
    UniRat coeff;
};

/// Closed form; for finite n <= kMaxHLAlphabet also substitutes into hl_p and throws
/// std::logic_error on disagreement. Zero when l(lambda) > n.
PrincipalValue principal_spec(const Partition& lambda, std::optional<int> n);

/// Closed form only, no cross-check.
PrincipalValue principal_spec_closed(const Partition& lambda, std::optional<int> n);

/// Schur polynomial s_lambda(x_1..x_n) by the bialternant ratio.
RatPoly schur_poly(const Partition& lambda, int n);

/// Monomial symmetric polynomial m_lambda(x_1..x_n).
RatPoly monomial_symmetric(const Partition& lambda, int n);

/// Coefficients of P_lambda specialised at q = value.
RatPoly hl_at_q(const Partition& lambda, int n, long value);

} // namespace ptorsion

namespace ptorsion {

/// P_lambda at a point by the coset sum with exact division; the coordinates must be
/// pairwise distinct. Independent of the symbolic polynomial computed by hl_p.
UniRat hl_evaluate(const Partition& lambda, const std::vector<UniRat>& x);

} // namespace ptorsion
