#pragma once

#include <gmpxx.h>

#include <string>

#include "ptorsion/int_poly.hpp"

namespace ptorsion {

/// Exact rational function num/den in one named parameter.
///
/// Canonical form: gcd(num, den) = 1 in Z[x] (content included), lead(den) > 0,
/// zero is 0/1. Constants carry no binding to a parameter and combine with any var.
class UniRat {
public:
    UniRat() : den_(1) {}
    UniRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    UniRat(const mpz_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    UniRat(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    UniRat(IntPoly num, char var = 'q');
    UniRat(IntPoly num, IntPoly den, char var = 'q');

    /// The parameter itself.
    static UniRat param(char var = 'q');
    /// c * var^k for any integer k.
    static UniRat monomial(const mpq_class& c, int k, char var = 'q');

    const IntPoly& num() const noexcept { return num_; }
    const IntPoly& den() const noexcept { return den_; }
    char var() const noexcept { return var_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    /// den is c * var^k.
    bool is_laurent() const noexcept { return den_.is_monomial(); }
    /// Polynomial whose coefficients are all nonnegative integers.
    bool has_nonnegative_integer_coeffs() const;

    /// Value as a rational; throws ParameterMismatch unless constant.
    mpq_class constant_value() const;

    UniRat operator-() const;
    UniRat& operator+=(const UniRat& o);
    UniRat& operator-=(const UniRat& o);
    UniRat& operator*=(const UniRat& o);
    UniRat& operator/=(const UniRat& o);
    friend UniRat operator+(UniRat a, const UniRat& b) { return a += b; }
    friend UniRat operator-(UniRat a, const UniRat& b) { return a -= b; }
    friend UniRat operator*(UniRat a, const UniRat& b) { return a *= b; }
    friend UniRat operator/(UniRat a, const UniRat& b) { return a /= b; }
    friend bool operator==(const UniRat& a, const UniRat& b);
    friend bool operator!=(const UniRat& a, const UniRat& b) { return !(a == b); }

    /// Throws SingularityError for zero.
    UniRat inverse() const;
    UniRat pow(int e) const;
    /// Multiplies by var^k.
    UniRat shifted(int k) const;

    /// f(var^k) for any nonzero integer k.
    UniRat substitute_power(int k) const;
    /// f(s) for an arbitrary rational function s.
    UniRat substitute(const UniRat& s) const;
    /// f(x); throws SingularityError at a pole.
    mpq_class evaluate(const mpq_class& x) const;
    /// Same function with the parameter renamed.
    UniRat renamed(char var) const;

    std::string to_string() const;

private:
    void normalize();
    char merge_var(const UniRat& o) const;

    IntPoly num_;
    IntPoly den_;
    char var_ = 'q';
};

} // namespace ptorsion
