#pragma once

#include <optional>

#include "ptorsion/unirat.hpp"
#include "ptorsion/zseries.hpp"

namespace ptorsion {

/// (a; base)_k. For k < 0 this is 1 / prod_{j=1}^{-k} (1 - a base^{-j}).
/// Throws SingularityError when a factor of a negative-k product vanishes.
UniRat qpochhammer(const UniRat& a, const UniRat& base, int k);

/// (c q^power; q)_k with base q in the named parameter.
UniRat qpochhammer(const UniRat& coefficient, int power, int k, char var = 'q');

/// (q; q)_n as a polynomial, cached. n >= 0.
const IntPoly& q_factorial(int n);

/// (c z^zpow; base)_infinity through z^order by the Euler expansion
/// sum_k (-c z^zpow)^k base^{C(k,2)} / (base; base)_k.
/// Throws std::invalid_argument without an order or when zpow < 1.
ZSeries qpochhammer_inf(const UniRat& c, int zpow, const UniRat& base, std::optional<int> order);

/// 1 / (c z^zpow; base)_infinity = sum_k (c z^zpow)^k / (base; base)_k.
ZSeries qpochhammer_inf_inverse(const UniRat& c, int zpow, const UniRat& base, std::optional<int> order);

/// Gaussian binomial [n k]_q; zero outside 0 <= k <= n. Cached.
const UniRat& qbinomial(int n, int k);

/// [n k] evaluated at an integer base b (so at q = b).
mpz_class qbinomial_at(int n, int k, const mpz_class& b);

/// Checks [n k]_{1/q} = q^{k(k-n)} [n k]_q exactly.
bool qbinomial_inverse_identity(int n, int k);

/// Binomial C(n, 2) as a long.
constexpr long choose2(long n) { return n * (n - 1) / 2; }

} // namespace ptorsion
