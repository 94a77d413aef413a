#include "ptorsion/unirat.hpp"

#include <algorithm>

#include "ptorsion/errors.hpp"

namespace ptorsion {

namespace {

// gcd specialised for the frequent case of a monomial argument.
IntPoly fast_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_monomial() || b.is_monomial()) {
        if (a.is_zero()) return b.primitive_part().scaled(b.content());
        if (b.is_zero()) return a.primitive_part().scaled(a.content());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return IntPoly::monomial(g, std::min(a.valuation(), b.valuation()));
    }
    return gcd(a, b);
}

} // namespace

UniRat::UniRat(const mpq_class& c) {
    mpq_class r(c);
    r.canonicalize();
    num_ = IntPoly(r.get_num());
    den_ = IntPoly(r.get_den());
}

UniRat::UniRat(IntPoly num, char var) : num_(std::move(num)), den_(1), var_(var) {}

UniRat::UniRat(IntPoly num, IntPoly den, char var)
    : num_(std::move(num)), den_(std::move(den)), var_(var) {
    if (den_.is_zero()) throw SingularityError("UniRat with zero denominator");
    normalize();
}

UniRat UniRat::param(char var) { return UniRat(IntPoly::monomial(1, 1), var); }

UniRat UniRat::monomial(const mpq_class& c, int k, char var) {
    UniRat r;
    r.var_ = var;
    if (c == 0) return r;
    if (k >= 0) {
        r.num_ = IntPoly::monomial(c.get_num(), k);
        r.den_ = IntPoly(c.get_den());
    } else {
        r.num_ = IntPoly(c.get_num());
        r.den_ = IntPoly::monomial(c.get_den(), -k);
    }
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

void UniRat::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    if (!den_.is_one()) {
        IntPoly g = fast_gcd(num_, den_);
        if (!g.is_one()) {
            if (g.is_constant()) {
                num_ = num_.divided_exact(g.lead());
                den_ = den_.divided_exact(g.lead());
            } else if (g.is_monomial()) {
                num_ = num_.shifted(-g.degree()).divided_exact(g.lead());
                den_ = den_.shifted(-g.degree()).divided_exact(g.lead());
            } else {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

char UniRat::merge_var(const UniRat& o) const {
    if (is_constant()) return o.var_;
    if (o.is_constant() || o.var_ == var_) return var_;
    throw ParameterMismatch(std::string("cannot combine rational functions in '") + var_ +
                            "' and '" + o.var_ + "'");
}

bool UniRat::has_nonnegative_integer_coeffs() const {
    if (!is_polynomial()) return false;
    return std::all_of(num_.coeffs().begin(), num_.coeffs().end(),
                       [](const mpz_class& c) { return c >= 0; });
}

mpq_class UniRat::constant_value() const {
    if (!is_constant()) {
        throw ParameterMismatch("value still depends on '" + std::string(1, var_) + "'");
    }
    mpq_class r(num_.coeff(0), den_.coeff(0));
    r.canonicalize();
    return r;
}

UniRat UniRat::operator-() const {
    UniRat r(*this);
    r.num_ = -r.num_;
    return r;
}

UniRat& UniRat::operator+=(const UniRat& o) {
    const char v = merge_var(o);
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        var_ = v;
        return *this;
    }
    var_ = v;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    if (den_.is_one()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        return *this;  // o reduced and den coprime to o.den multiple: already reduced
    }
    if (o.den_.is_one()) {
        num_ += o.num_ * den_;
        return *this;
    }
    IntPoly g = fast_gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = IntPoly(1);
        return *this;
    }
    IntPoly b1 = exact_div(den_, g);
    IntPoly d1 = exact_div(o.den_, g);
    num_ = num_ * d1 + o.num_ * b1;
    den_ = b1 * o.den_;
    normalize();
    return *this;
}

UniRat& UniRat::operator-=(const UniRat& o) { return *this += -o; }

UniRat& UniRat::operator*=(const UniRat& o) {
    const char v = merge_var(o);
    var_ = v;
    if (is_zero() || o.is_zero()) {
        num_ = IntPoly();
        den_ = IntPoly(1);
        return *this;
    }
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    IntPoly g1 = fast_gcd(num_, o.den_);
    IntPoly g2 = fast_gcd(o.num_, den_);
    IntPoly a = g1.is_one() ? num_ : exact_div(num_, g1);
    IntPoly d = g1.is_one() ? o.den_ : exact_div(o.den_, g1);
    IntPoly c = g2.is_one() ? o.num_ : exact_div(o.num_, g2);
    IntPoly b = g2.is_one() ? den_ : exact_div(den_, g2);
    num_ = a * c;
    den_ = b * d;
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

UniRat& UniRat::operator/=(const UniRat& o) { return *this *= o.inverse(); }

bool operator==(const UniRat& a, const UniRat& b) {
    if (a.num_ != b.num_ || a.den_ != b.den_) return false;
    return a.is_constant() || a.var_ == b.var_;
}

UniRat UniRat::inverse() const {
    if (is_zero()) throw SingularityError("inverse of zero rational function");
    UniRat r;
    r.var_ = var_;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

UniRat UniRat::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    UniRat result(1);
    result.var_ = var_;
    UniRat base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

UniRat UniRat::shifted(int k) const { return *this * monomial(1, k, var_); }

UniRat UniRat::substitute_power(int k) const {
    if (k == 0) throw std::invalid_argument("substitute_power requires k != 0");
    if (is_constant()) return *this;
    if (k > 0) return UniRat(num_.compose_power(k), den_.compose_power(k), var_);
    const int m = -k;
    const int dn = num_.degree();
    const int dd = den_.degree();
    UniRat r(num_.reversed(dn).compose_power(m), den_.reversed(dd).compose_power(m), var_);
    return r.shifted(m * (dd - dn));
}

UniRat UniRat::substitute(const UniRat& s) const {
    if (is_constant()) return *this;
    auto horner = [&s](const IntPoly& p) {
        UniRat acc;
        for (int i = p.degree(); i >= 0; --i) {
            acc *= s;
            acc += UniRat(p.coeff(i));
        }
        return acc;
    };
    return horner(num_) / horner(den_);
}

mpq_class UniRat::evaluate(const mpq_class& x) const {
    mpq_class d = den_.evaluate(x);
    if (d == 0) {
        throw SingularityError("pole of " + to_string() + " at " + x.get_str());
    }
    mpq_class r = num_.evaluate(x) / d;
    r.canonicalize();
    return r;
}

UniRat UniRat::renamed(char var) const {
    UniRat r(*this);
    r.var_ = var;
    return r;
}

std::string UniRat::to_string() const {
    if (den_.is_one()) return num_.to_string(var_);
    return "(" + num_.to_string(var_) + ")/(" + den_.to_string(var_) + ")";
}

} // namespace ptorsion
