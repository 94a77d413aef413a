#include "ptorsion/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ptorsion {

IntPoly::IntPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

IntPoly::IntPoly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
    if (degree < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
    IntPoly p;
    if (c != 0) {
        p.c_.assign(degree + 1, mpz_class(0));
        p.c_[degree] = c;
    }
    return p;
}

IntPoly IntPoly::one_minus(const mpz_class& c, int k) {
    return IntPoly(1) - monomial(c, k);
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool IntPoly::is_monomial() const noexcept {
    if (c_.empty()) return true;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
        if (c_[i] != 0) return false;
    }
    return true;
}

int IntPoly::valuation() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

mpz_class IntPoly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : mpz_class(0);
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    *this = *this * o;
    return *this;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
    if (c == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

IntPoly IntPoly::divided_exact(const mpz_class& c) const {
    if (c == 0) throw std::domain_error("IntPoly: division by zero constant");
    IntPoly r(*this);
    for (auto& x : r.c_) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
            throw std::domain_error("IntPoly: inexact constant division");
        }
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    if (k > 0) {
        r.c_.assign(k, mpz_class(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }
    if (valuation() < -k) throw std::domain_error("IntPoly::shifted: negative power leaves remainder");
    r.c_.assign(c_.begin() + (-k), c_.end());
    return r;
}

IntPoly IntPoly::compose_power(int k) const {
    if (k < 1) throw std::invalid_argument("IntPoly::compose_power requires k >= 1");
    if (is_zero() || k == 1) return *this;
    std::vector<mpz_class> out(static_cast<std::size_t>(degree()) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::reversed(int d) const {
    if (d < degree()) throw std::invalid_argument("IntPoly::reversed: d below degree");
    std::vector<mpz_class> out(d + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) out[d - i] = c_[i];
    return IntPoly(std::move(out));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (lead() < 0) g = -g;
    return (g == 1) ? *this : divided_exact(g);
}

mpq_class IntPoly::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::string IntPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const mpz_class& c = c_[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i >= 1) {
            if (mag != 1) out << '*';
            out << var;
            if (i >= 2) out << '^' << i;
        }
    }
    return out.str();
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_divmod by zero polynomial");
    if (a.degree() < b.degree()) return {IntPoly(), a};
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> quo(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        const mpz_class t = r[k];
        // r <- lb * r - t x^{k-db} b ; quotient scaled alongside.
        for (auto& x : quo) x *= lb;
        quo[k - db] += t;
        for (int i = 0; i < k; ++i) r[i] *= lb;
        r[k] = 0;
        if (t != 0) {
            for (int i = 0; i < db; ++i) r[i + k - db] -= t * b.coeffs()[i];
        }
    }
    r.resize(db);
    return {IntPoly(std::move(quo)), IntPoly(std::move(r))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw std::domain_error("exact_div: inexact division");
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> quo(a.degree() - db + 1);
    mpz_class t;
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) {
            throw std::domain_error("exact_div: inexact division");
        }
        mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
        quo[k - db] = t;
        for (int i = 0; i <= db; ++i) {
            mpz_submul(r[i + k - db].get_mpz_t(), t.get_mpz_t(), b.coeffs()[i].get_mpz_t());
        }
    }
    for (int i = 0; i < db; ++i) {
        if (r[i] != 0) throw std::domain_error("exact_div: inexact division");
    }
    return IntPoly(std::move(quo));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part().scaled(b.content());
    if (b.is_zero()) return a.primitive_part().scaled(a.content());
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    // Common power of x handled separately; keeps the PRS on smaller inputs.
    const int shift = std::min(u.valuation(), v.valuation());
    u = u.shifted(-u.valuation());
    v = v.shifted(-v.valuation());
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero() && v.degree() > 0) {
        IntPoly r = pseudo_divmod(u, v).second;
        u = std::move(v);
        v = r.primitive_part();
    }
    IntPoly g = v.is_zero() ? u : IntPoly(1);
    return g.primitive_part().shifted(shift).scaled(cg);
}

} // namespace ptorsion
