#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ptorsion {

/// Dense univariate polynomial over Z, ascending coefficients, no trailing zeros.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);  // NOLINT(google-explicit-constructor)
    IntPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly monomial(const mpz_class& c, int degree);
    /// 1 - c x^k for k >= 0.
    static IntPoly one_minus(const mpz_class& c, int k);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// Zero, or exactly one nonzero coefficient.
    bool is_monomial() const noexcept;
    /// Lowest exponent with a nonzero coefficient; -1 for zero.
    int valuation() const noexcept;

    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
    mpz_class coeff(int i) const;
    const mpz_class& lead() const { return c_.back(); }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly scaled(const mpz_class& c) const;
    /// Divides every coefficient by c; throws std::domain_error if any is inexact.
    IntPoly divided_exact(const mpz_class& c) const;
    /// Multiplies by x^k; negative k requires valuation >= -k.
    IntPoly shifted(int k) const;
    /// p(x^k) for k >= 1.
    IntPoly compose_power(int k) const;
    /// x^d p(1/x); requires d >= degree.
    IntPoly reversed(int d) const;

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// this / content, with positive leading coefficient.
    IntPoly primitive_part() const;

    mpq_class evaluate(const mpq_class& x) const;
    mpz_class evaluate(const mpz_class& x) const;

    std::string to_string(char var = 'q') const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Primitive gcd with positive leading coefficient times the gcd of contents.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// a / b when the division is exact in Z[x]; throws std::domain_error otherwise.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Pseudo-division: returns (quotient, remainder) with lead(b)^k a = q b + r.
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b);

} // namespace ptorsion
