#include <doctest.h>

#include <random>

#include "ptorsion/errors.hpp"
#include "ptorsion/int_poly.hpp"
#include "ptorsion/json_io.hpp"
#include "ptorsion/mpoly.hpp"
#include "ptorsion/qseries.hpp"
#include "ptorsion/unirat.hpp"
#include "ptorsion/zseries.hpp"
#include "test_helpers.hpp"

using namespace ptorsion;
using testing::poly;

namespace {

UniRat random_unirat(std::mt19937& rng) {
    std::uniform_int_distribution<long> c(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto rand_poly = [&] {
        std::vector<long> cs(deg(rng) + 1);
        for (auto& v : cs) v = c(rng);
        return poly(cs);
    };
    UniRat den = rand_poly();
    while (den.is_zero()) den = rand_poly();
    return rand_poly() / den;
}

} // namespace

TEST_CASE("IntPoly gcd and exact division") {
    const IntPoly a(std::vector<mpz_class>{-1, 0, 1});  // q^2 - 1
    const IntPoly b(std::vector<mpz_class>{1, 1});      // q + 1
    CHECK(gcd(a, b) == b);
    CHECK(exact_div(a, b) == IntPoly(std::vector<mpz_class>{-1, 1}));
    CHECK_THROWS(exact_div(b, a));
    const IntPoly c(std::vector<mpz_class>{0, 6, 6});
    CHECK(gcd(c, IntPoly(std::vector<mpz_class>{0, 0, 4, 4})) == IntPoly(std::vector<mpz_class>{0, 2, 2}));
    CHECK(a.evaluate(mpz_class(3)) == 8);
}

TEST_CASE("UniRat canonical forms are unique") {
    const UniRat q = UniRat::param();
    CHECK((q * q - 1) / (q - 1) == q + 1);
    CHECK(UniRat(mpq_class(6, 4)) == UniRat(mpq_class(3, 2)));
    CHECK((q / (q * q)).to_string() == UniRat::monomial(1, -1).to_string());
    std::mt19937 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const UniRat a = random_unirat(rng);
        const UniRat b = random_unirat(rng);
        if (!a.is_zero()) CHECK(a * a.inverse() == UniRat(1));
        CHECK((a + b) - b == a);
        CHECK((a * b) == (b * a));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // Build the same value along a different route.
        const UniRat c = (a * (q + 1) + b * (q + 1)) / (q + 1);
        CHECK(c == a + b);
        CHECK(c.to_string() == (a + b).to_string());
    }
}

TEST_CASE("UniRat parameters are never mixed silently") {
    const UniRat q = UniRat::param('q');
    const UniRat t = UniRat::param('t');
    CHECK_THROWS_AS(q + t, ParameterMismatch);
    CHECK((q + 2).var() == 'q');
    CHECK((UniRat(3) * t).var() == 't');
    CHECK(t.renamed('q') == q);
}

TEST_CASE("UniRat substitution and evaluation") {
    const UniRat q = UniRat::param();
    const UniRat f = (1 + q) / (1 - q);
    CHECK(f.substitute_power(-1) == (q + 1) / (q - 1));
    CHECK(f.substitute_power(2) == (1 + q * q) / (1 - q * q));
    CHECK(f.evaluate(mpq_class(2)) == -3);
    CHECK_THROWS_AS(f.evaluate(mpq_class(1)), SingularityError);
    CHECK(f.substitute(q * q) == f.substitute_power(2));
    CHECK(q.pow(-2) == UniRat::monomial(1, -2));
}

TEST_CASE("qpochhammer") {
    const UniRat q = UniRat::param();
    const UniRat a = UniRat::param('a');
    CHECK(qpochhammer(a, q.renamed('a'), 0) == UniRat(1));
    CHECK(qpochhammer(q, q, 2) == (1 - q) * (1 - q * q));
    CHECK(qpochhammer(UniRat(1), 1, 2) == (1 - q) * (1 - q * q));
    // (a;q)_{-1} = 1/(1 - a/q)
    CHECK(qpochhammer(q * q, q, -1) == (1 - q).inverse());
    CHECK_THROWS_AS(qpochhammer(q, q, -1), SingularityError);
    CHECK(UniRat(q_factorial(3)) == (1 - q) * (1 - q * q) * (1 - q * q * q));
}

TEST_CASE("infinite qpochhammer by the Euler expansion") {
    const UniRat q = UniRat::param();
    const ZSeries s = qpochhammer_inf(q, 1, q, 2);
    CHECK(s.coeff_at(0) == UniRat(1));
    CHECK(s.coeff_at(1) == -q / (1 - q));
    // Through z^2: q^3/((1-q)(1-q^2)).
    CHECK(s.coeff_at(2) == q.pow(3) / ((1 - q) * (1 - q * q)));
    CHECK_THROWS_AS(qpochhammer_inf(q, 1, q, std::nullopt), std::invalid_argument);
    const ZSeries inv = qpochhammer_inf_inverse(q, 1, q, 6);
    CHECK(s.truncated(2) * inv.truncated(2) == ZSeries::constant(2, UniRat(1)));
    CHECK((qpochhammer_inf(q, 1, q, 6) * inv).first_mismatch(ZSeries::constant(6, UniRat(1))) == std::nullopt);
}

TEST_CASE("qbinomial values and recurrences") {
    CHECK(qbinomial(2, 1) == poly({1, 1}));
    CHECK(qbinomial(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK(qbinomial(3, 5).is_zero());
    CHECK(qbinomial(3, -1).is_zero());
    const UniRat q = UniRat::param();
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(qbinomial(n, k) == qbinomial(n - 1, k - 1) + q.pow(k) * qbinomial(n - 1, k));
            CHECK(qbinomial(n, k) == q.pow(n - k) * qbinomial(n - 1, k - 1) + qbinomial(n - 1, k));
        }
    }
    CHECK(qbinomial_at(4, 2, 2) == 35);
}

TEST_CASE("qbinomial_inverse_identity") {
    CHECK(qbinomial_inverse_identity(2, 1));
    CHECK(qbinomial_inverse_identity(0, 0));
    CHECK(qbinomial_inverse_identity(5, 3));
}

TEST_CASE("series operations") {
    ZSeries a = ZSeries::constant(2, UniRat(1));
    a.set_coeff(1, UniRat(1));
    ZSeries b = ZSeries::constant(2, UniRat(1));
    b.set_coeff(1, UniRat(-1));
    ZSeries expect = ZSeries::constant(2, UniRat(1));
    expect.set_coeff(2, UniRat(-1));
    CHECK(a * b == expect);
    const UniRat q = UniRat::param();
    CHECK(qpochhammer_inf_inverse(q, 1, q, 4).coeff_at(0) == UniRat(1));
    ZSeries geo(4);
    for (int i = 0; i <= 4; ++i) geo.set_coeff(i, UniRat(1));
    const ZSeries sub = geo.substitute_z_power(1, q);
    for (int i = 0; i <= 4; ++i) CHECK(sub.coeff_at(i) == q.pow(i));
    CHECK_THROWS_AS(geo.coeff_at(5), std::out_of_range);
    CHECK((geo * b).first_mismatch(ZSeries::constant(4, UniRat(1))) == std::nullopt);
    ZSeries one_minus_z = ZSeries::constant(4, UniRat(1));
    one_minus_z.set_coeff(1, UniRat(-1));
    CHECK(geo.inverse() == one_minus_z);
}

TEST_CASE("finite q-binomial theorem through n = 8") {
    const UniRat q = UniRat::param();
    for (int n = 0; n <= 8; ++n) {
        ZSeries lhs(n), rhs = ZSeries::constant(n, UniRat(1));
        for (int k = 0; k <= n; ++k) lhs.set_coeff(k, qbinomial(n, k) * q.pow(static_cast<int>(choose2(k))) * UniRat(k % 2 ? -1L : 1L));
        for (int j = 0; j < n; ++j) {
            ZSeries f = ZSeries::constant(n, UniRat(1));
            if (n >= 1) f.set_coeff(1, -q.pow(j));
            rhs *= f;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("MPoly arithmetic, symmetry and exact linear division") {
    using P = RatPoly;
    const auto names = P::in_x(2).names();
    const P x1 = P::variable(names, 0), x2 = P::variable(names, 1);
    const UniRat q = UniRat::param();
    const P f = (x1 - x2.scaled(q)) * (x1 + x2);
    CHECK(f.divide_by_linear(0, 1, q) == x1 + x2);
    CHECK_THROWS(f.divide_by_linear(0, 1, UniRat(2)));
    CHECK((x1 * x2).is_symmetric(0, 2));
    CHECK_FALSE(f.is_symmetric(0, 2));
    int deg = -1;
    CHECK(f.is_homogeneous(0, 2, &deg));
    CHECK(deg == 2);
    CHECK(f.evaluate({UniRat(1), UniRat(1)}) == (1 - q) * 2);
    CHECK(f.swapped(0, 1).swapped(0, 1) == f);
}

TEST_CASE("JSON round-trip for UniRat and ZSeries") {
    const UniRat q = UniRat::param();
    const UniRat f = (1 + q * 3) / (2 - q * q);
    CHECK(json::parse_unirat(json::to_json(f)) == f);
    const ZSeries s = qpochhammer_inf(q, 1, q, 4);
    const ZSeries back = json::parse_zseries(json::to_json(s));
    CHECK(back == s);
    // The denominator is stored monic up to sign convention: leading coefficient positive.
    CHECK(json::to_json(f).at("num") == nlohmann::json::array({-1, -3}));
    CHECK(json::to_json(f).at("den") == nlohmann::json::array({-2, 0, 1}));
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    CHECK(json::integer(big).is_string());
    CHECK(json::fraction(mpq_class(4, 3)) == "4/3");
}
