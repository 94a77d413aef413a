#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptorsion/errors.hpp"
#include "ptorsion/unirat.hpp"

namespace ptorsion {

inline bool coeff_is_zero(const UniRat& c) { return c.is_zero(); }
inline bool coeff_is_zero(const mpq_class& c) { return c == 0; }
inline bool coeff_is_zero(const mpz_class& c) { return c == 0; }
inline std::string coeff_to_string(const UniRat& c) { return c.to_string(); }
inline std::string coeff_to_string(const mpq_class& c) { return c.get_str(); }
inline std::string coeff_to_string(const mpz_class& c) { return c.get_str(); }

/// Sparse multivariate Laurent polynomial with coefficients in C.
///
/// Every exponent vector has exactly nvars() entries; zero coefficients are never stored.
template <class C>
class MPoly {
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, C>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> names) : names_(std::move(names)) {}

    /// Names x1..xn.
    static MPoly in_x(int n) {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        return MPoly(std::move(names));
    }

    static MPoly constant(std::vector<std::string> names, const C& c) {
        MPoly p(std::move(names));
        p.add_term(Exponent(p.nvars(), 0), c);
        return p;
    }

    /// c * var_i (0-based index).
    static MPoly variable(std::vector<std::string> names, int i, const C& c = C(1)) {
        MPoly p(std::move(names));
        Exponent e(p.nvars(), 0);
        e.at(i) = 1;
        p.add_term(e, c);
        return p;
    }

    /// c * x^e.
    static MPoly term(std::vector<std::string> names, Exponent e, const C& c) {
        MPoly p(std::move(names));
        p.add_term(std::move(e), c);
        return p;
    }

    int nvars() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    C coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Exponent e, const C& c) {
        if (static_cast<int>(e.size()) != nvars()) {
            throw DimensionError("exponent vector length does not match variable count");
        }
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) {
        adopt_names(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MPoly& operator-=(const MPoly& o) {
        adopt_names(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

    friend MPoly operator*(const MPoly& a, const MPoly& b) { return a.truncated_mul(b, {}, -1); }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const C& c) const {
        MPoly r(names_);
        if (coeff_is_zero(c)) return r;
        for (const auto& [e, v] : terms_) r.add_term(e, v * c);
        return r;
    }

    /// Product keeping only terms with sum_i weights[i]*e[i] <= bound.
    /// An empty weight vector or negative bound disables truncation.
    MPoly truncated_mul(const MPoly& o, const std::vector<int>& weights, long bound) const {
        MPoly r(names_.empty() ? o.names_ : names_);
        if (!o.names_.empty() && !names_.empty() && o.names_ != names_) {
            throw ParameterMismatch("multiplying polynomials over different variable lists");
        }
        const bool truncate = !weights.empty() && bound >= 0;
        Exponent e(r.nvars());
        for (const auto& [ea, ca] : terms_) {
            long wa = truncate ? weight_of(ea, weights) : 0;
            if (truncate && wa > bound) continue;
            for (const auto& [eb, cb] : o.terms_) {
                if (truncate && wa + weight_of(eb, weights) > bound) continue;
                for (int i = 0; i < r.nvars(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    /// Drops terms above the weighted bound.
    MPoly truncated(const std::vector<int>& weights, long bound) const {
        MPoly r(names_);
        for (const auto& [e, c] : terms_) {
            if (weight_of(e, weights) <= bound) r.terms_.emplace(e, c);
        }
        return r;
    }

    MPoly pow(int k) const {
        MPoly r = constant(names_, C(1));
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /// Applies f to each coefficient, dropping zeros.
    template <class D>
    MPoly<D> map_coeffs(const std::function<D(const C&)>& f) const {
        MPoly<D> r(names_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    /// Substitutes var_i = value, leaving var_i with exponent 0 everywhere.
    MPoly substitute(int i, const C& value) const {
        MPoly r(names_);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            f[i] = 0;
            r.add_term(std::move(f), c * power(value, e[i]));
        }
        return r;
    }

    /// Full evaluation at values[i] for var_i.
    C evaluate(const std::vector<C>& values) const {
        if (static_cast<int>(values.size()) != nvars()) {
            throw DimensionError("evaluation point has wrong dimension");
        }
        std::vector<std::map<int, C>> cache(nvars());
        C total(0);
        for (const auto& [e, c] : terms_) {
            C t = c;
            for (int i = 0; i < nvars(); ++i) {
                if (e[i] == 0) continue;
                auto it = cache[i].find(e[i]);
                if (it == cache[i].end()) it = cache[i].emplace(e[i], power(values[i], e[i])).first;
                t *= it->second;
            }
            total += t;
        }
        return total;
    }

    /// Swaps var_i and var_j.
    MPoly swapped(int i, int j) const {
        MPoly r(names_);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            std::swap(f[i], f[j]);
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Renames variables by a permutation: variable i goes to position perm[i].
    MPoly permuted(const std::vector<int>& perm) const {
        MPoly r(names_);
        Exponent f(nvars());
        for (const auto& [e, c] : terms_) {
            for (int i = 0; i < nvars(); ++i) f[perm[i]] = e[i];
            r.terms_.emplace(f, c);
        }
        return r;
    }

    /// Invariant under every adjacent transposition of vars[first..last).
    bool is_symmetric(int first, int last) const {
        for (int i = first; i + 1 < last; ++i) {
            if (!(swapped(i, i + 1) == *this)) return false;
        }
        return true;
    }

    /// All terms share one total degree over vars[first..last); zero counts as homogeneous.
    bool is_homogeneous(int first, int last, int* degree = nullptr) const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int i = first; i < last; ++i) s += e[i];
            if (d && *d != s) return false;
            d = s;
        }
        if (degree) *degree = d.value_or(0);
        return true;
    }

    /// Exact quotient by (var_i - c * var_j), or by (var_i - c) when j < 0.
    /// Throws std::domain_error if the remainder is nonzero.
    MPoly divide_by_linear(int i, int j, const C& c) const {
        // Synthetic division in var_i over the ring of remaining variables:
        // the work happens on whole MPoly slices because c * var_j mixes slices.
        std::map<int, MPoly> by_degree;
        for (const auto& [e, v] : terms_) {
            Exponent rest = e;
            rest[i] = 0;
            auto it = by_degree.try_emplace(e[i], MPoly(names_)).first;
            it->second.add_term(std::move(rest), v);
        }
        MPoly quotient(names_);
        if (by_degree.empty()) return quotient;
        const int lo = by_degree.begin()->first;
        const int hi = by_degree.rbegin()->first;
        MPoly multiplier = (j < 0) ? constant(names_, c) : variable(names_, j, c);
        MPoly carry(names_);
        for (int d = hi; d > lo; --d) {
            auto it = by_degree.find(d);
            MPoly cur = carry;
            if (it != by_degree.end()) cur += it->second;
            // Coefficient of var_i^{d-1} in the quotient.
            for (const auto& [e, v] : cur.terms_) {
                Exponent f = e;
                f[i] = d - 1;
                quotient.add_term(std::move(f), v);
            }
            carry = cur * multiplier;
        }
        auto it = by_degree.find(lo);
        MPoly rem = carry;
        if (it != by_degree.end()) rem += it->second;
        // With Laurent exponents the division is still by a polynomial in var_i, so a nonzero
        // tail at the lowest degree is a genuine remainder.
        if (!rem.is_zero()) throw std::domain_error("divide_by_linear: nonzero remainder");
        return quotient;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << '(' << coeff_to_string(c) << ')';
            for (int i = 0; i < nvars(); ++i) {
                if (e[i] == 0) continue;
                out << '*' << names_[i];
                if (e[i] != 1) out << '^' << e[i];
            }
        }
        return out.str();
    }

private:
    static long weight_of(const Exponent& e, const std::vector<int>& w) {
        long s = 0;
        for (std::size_t i = 0; i < w.size() && i < e.size(); ++i) s += static_cast<long>(w[i]) * e[i];
        return s;
    }

    static C power(const C& base, int k) {
        if (k < 0) return C(1) / power(base, -k);
        C r(1);
        for (int i = 0; i < k; ++i) r *= base;
        return r;
    }

    void adopt_names(const MPoly& o) {
        if (names_.empty()) {
            names_ = o.names_;
        } else if (!o.names_.empty() && o.names_ != names_) {
            throw ParameterMismatch("adding polynomials over different variable lists");
        }
    }

    std::vector<std::string> names_;
    Terms terms_;
};

using RatPoly = MPoly<UniRat>;

} // namespace ptorsion
