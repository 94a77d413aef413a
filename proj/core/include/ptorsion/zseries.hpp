#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptorsion/unirat.hpp"

namespace ptorsion {

/// Power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}) with rational-function coefficients.
/// Arithmetic never reads coefficients above the order.
class ZSeries {
public:
    ZSeries() : ZSeries(0) {}
    explicit ZSeries(int order, char var = 'z');
    ZSeries(int order, std::vector<UniRat> coeffs, char var = 'z');

    static ZSeries constant(int order, const UniRat& c, char var = 'z');
    /// c z^k truncated at the order (zero if k > order).
    static ZSeries monomial(int order, const UniRat& c, int k, char var = 'z');

    int order() const noexcept { return order_; }
    char var() const noexcept { return var_; }
    const std::vector<UniRat>& coeffs() const noexcept { return c_; }
    /// Throws std::out_of_range above the order.
    const UniRat& coeff_at(int n) const;
    void set_coeff(int n, UniRat c);
    void add_to_coeff(int n, const UniRat& c);

    ZSeries operator-() const;
    ZSeries& operator+=(const ZSeries& o);
    ZSeries& operator-=(const ZSeries& o);
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
    friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
    ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }
    friend bool operator==(const ZSeries& a, const ZSeries& b);

    ZSeries scaled(const UniRat& c) const;
    /// Multiplies by z^k for k >= 0.
    ZSeries shifted(int k) const;
    /// Same series known to a lower order.
    ZSeries truncated(int order) const;
    /// f(factor * z^k) for k >= 1; the new order is k*(N+1)-1.
    ZSeries substitute_z_power(int k, const UniRat& factor) const;
    /// Applies a map to every coefficient (e.g. a parameter substitution).
    template <class F>
    ZSeries map_coeffs(F&& f) const {
        ZSeries r(order_, var_);
        for (int i = 0; i <= order_; ++i) r.c_[i] = f(c_[i]);
        return r;
    }
    /// Multiplicative inverse; requires a nonzero constant term.
    ZSeries inverse() const;

    /// First index where the two series differ, up to the smaller order.
    std::optional<int> first_mismatch(const ZSeries& o) const;

    std::string to_string() const;

private:
    int order_;
    std::vector<UniRat> c_;
    char var_;
};

} // namespace ptorsion
