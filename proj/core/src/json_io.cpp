#include "ptorsion/json_io.hpp"

#include <limits>

#include "ptorsion/errors.hpp"

namespace ptorsion::json {

json integer(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

json fraction(const mpq_class& v) { return v.get_str(); }

mpq_class parse_fraction(const json& j) {
    if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<std::int64_t>())));
    if (!j.is_string()) throw ParseError("expected a fraction string");
    mpq_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0) {
        throw ParseError("malformed fraction '" + j.get<std::string>() + "'");
    }
    v.canonicalize();
    return v;
}

json coefficients(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(integer(c));
    return a;
}

IntPoly parse_coefficients(const json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient list");
    std::vector<mpz_class> cs;
    for (const auto& e : j) {
        if (e.is_number_integer()) {
            cs.emplace_back(std::to_string(e.get<std::int64_t>()));
        } else if (e.is_string()) {
            mpz_class v;
            if (v.set_str(e.get<std::string>(), 10) != 0) throw ParseError("malformed integer coefficient");
            cs.push_back(v);
        } else {
            throw ParseError("coefficients must be integers or decimal strings");
        }
    }
    return IntPoly(std::move(cs));
}

json to_json(const Partition& p) { return p.empty() ? std::string() : to_string(p); }

json to_json(const UniRat& r) {
    return json{{"num", coefficients(r.num())}, {"den", coefficients(r.den())}, {"var", std::string(1, r.var())}};
}

UniRat parse_unirat(const json& j) {
    const std::string var = j.value("var", std::string("q"));
    if (var.size() != 1) throw ParseError("variable name must be one character");
    IntPoly den = j.contains("den") ? parse_coefficients(j.at("den")) : IntPoly(1);
    if (den.is_zero()) throw SingularityError("zero denominator");
    return UniRat(parse_coefficients(j.at("num")), std::move(den), var[0]);
}

json to_json(const ZSeries& s) {
    json cs = json::array();
    for (const auto& c : s.coeffs()) cs.push_back(to_json(c));
    return json{{"order", s.order()}, {"var", std::string(1, s.var())}, {"coeffs", cs}};
}

ZSeries parse_zseries(const json& j) {
    const int order = j.at("order").get<int>();
    const std::string var = j.value("var", std::string("z"));
    if (var.size() != 1) throw ParseError("variable name must be one character");
    ZSeries s(order, var[0]);
    const auto& cs = j.at("coeffs");
    if (!cs.is_array() || static_cast<int>(cs.size()) != order + 1) {
        throw ParseError("coefficient list length must be order + 1");
    }
    for (int i = 0; i <= order; ++i) s.set_coeff(i, parse_unirat(cs[i]));
    return s;
}

json to_json(const RExpansion& e) {
    json a = json::array();
    for (const auto& [mu, c] : e.coeffs) {
        if (!c.is_polynomial()) throw std::logic_error("expansion coefficient is not a polynomial");
        a.push_back(json{{"mu", to_json(mu)}, {"coeff", coefficients(c.num())}});
    }
    return a;
}

json to_json(const RatPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json{{"exponent", e}, {"coeff", to_json(c)}});
    return json{{"vars", p.names()}, {"terms", terms}};
}

json to_json(const IdentityCase& c) {
    json params = json::object();
    const CaseParams& p = c.params;
    auto put = [&](const char* key, const auto& v) {
        if (v) params[key] = *v;
    };
    put("n", p.n);
    put("k", p.k);
    put("ell", p.ell);
    if (p.lambda) params["lambda"] = to_json(*p.lambda);
    put("p", p.p);
    put("zmax", p.zmax);
    put("alphabet", p.alphabet);
    put("degree", p.degree);
    put("samples", p.samples);
    put("umax", p.umax);
    if (p.specialize_y) params["specialize_y"] = true;
    json j{{"id", to_string(c.id)}, {"strategy", to_string(c.strategy)}, {"seed", c.seed}, {"params", params}};
    if (c.mutate) j["mutate"] = true;
    return j;
}

json to_json(const VerificationReport& r) {
    json j{{"case", to_json(r.kase)},
           {"status", to_string(r.status)},
           {"message", r.message},
           {"coefficients_compared", r.coefficients_compared},
           {"seconds", r.seconds}};
    if (r.mismatch) {
        j["mismatch"] = json{{"location", r.mismatch->location}, {"lhs", r.mismatch->lhs}, {"rhs", r.mismatch->rhs}};
    }
    if (r.mutated_location) j["mutated_location"] = *r.mutated_location;
    return j;
}

} // namespace ptorsion::json
