#include "ptorsion/zseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptorsion/errors.hpp"

namespace ptorsion {

namespace {

void check_var(char a, char b) {
    if (a != b) {
        throw ParameterMismatch(std::string("series in '") + a + "' and '" + b + "' cannot be combined");
    }
}

} // namespace

ZSeries::ZSeries(int order, char var) : order_(order), c_(order + 1), var_(var) {
    if (order < 0) throw std::invalid_argument("ZSeries order must be nonnegative");
}

ZSeries::ZSeries(int order, std::vector<UniRat> coeffs, char var) : ZSeries(order, var) {
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) c_[i] = std::move(coeffs[i]);
}

ZSeries ZSeries::constant(int order, const UniRat& c, char var) { return monomial(order, c, 0, var); }

ZSeries ZSeries::monomial(int order, const UniRat& c, int k, char var) {
    ZSeries s(order, var);
    if (k < 0) throw std::invalid_argument("ZSeries::monomial with negative power");
    if (k <= order) s.c_[k] = c;
    return s;
}

const UniRat& ZSeries::coeff_at(int n) const {
    if (n < 0 || n > order_) {
        throw std::out_of_range("coefficient z^" + std::to_string(n) + " beyond truncation order " +
                                std::to_string(order_));
    }
    return c_[n];
}

void ZSeries::set_coeff(int n, UniRat c) {
    if (n < 0 || n > order_) throw std::out_of_range("ZSeries::set_coeff beyond order");
    c_[n] = std::move(c);
}

void ZSeries::add_to_coeff(int n, const UniRat& c) {
    if (n < 0) throw std::out_of_range("ZSeries::add_to_coeff with negative index");
    if (n <= order_) c_[n] += c;
}

ZSeries ZSeries::operator-() const {
    ZSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
    check_var(var_, o.var_);
    *this = truncated(std::min(order_, o.order_));
    for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
    return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& o) { return *this += -o; }

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    check_var(a.var_, b.var_);
    const int n = std::min(a.order_, b.order_);
    ZSeries r(n, a.var_);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

bool operator==(const ZSeries& a, const ZSeries& b) {
    return a.order_ == b.order_ && a.var_ == b.var_ && a.c_ == b.c_;
}

ZSeries ZSeries::scaled(const UniRat& c) const {
    ZSeries r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

ZSeries ZSeries::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("ZSeries::shifted requires k >= 0");
    ZSeries r(order_, var_);
    for (int i = 0; i + k <= order_; ++i) r.c_[i + k] = c_[i];
    return r;
}

ZSeries ZSeries::truncated(int order) const {
    if (order > order_) throw std::invalid_argument("cannot raise the truncation order");
    ZSeries r(order, var_);
    std::copy(c_.begin(), c_.begin() + order + 1, r.c_.begin());
    return r;
}

ZSeries ZSeries::substitute_z_power(int k, const UniRat& factor) const {
    if (k < 1) throw std::invalid_argument("substitute_z_power requires k >= 1");
    ZSeries r(k * (order_ + 1) - 1, var_);
    UniRat f(1);
    for (int i = 0; i <= order_; ++i) {
        r.c_[i * k] = c_[i] * f;
        f *= factor;
    }
    return r;
}

ZSeries ZSeries::inverse() const {
    if (c_[0].is_zero()) throw SingularityError("series inverse needs a nonzero constant term");
    ZSeries r(order_, var_);
    const UniRat inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        UniRat acc;
        for (int j = 1; j <= n; ++j) {
            if (!c_[j].is_zero()) acc += c_[j] * r.c_[n - j];
        }
        r.c_[n] = -acc * inv0;
    }
    return r;
}

std::optional<int> ZSeries::first_mismatch(const ZSeries& o) const {
    const int n = std::min(order_, o.order_);
    for (int i = 0; i <= n; ++i) {
        if (c_[i] != o.c_[i]) return i;
    }
    return std::nullopt;
}

std::string ZSeries::to_string() const {
    std::string out;
    for (int i = 0; i <= order_; ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[i].to_string() + ")";
        if (i > 0) out += std::string("*") + var_ + (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var_ + "^" + std::to_string(order_ + 1) + ")";
}

} // namespace ptorsion
