#include <doctest.h>

#include "ptorsion/errors.hpp"
#include "ptorsion/qseries.hpp"
#include "ptorsion/rlambda.hpp"
#include "test_helpers.hpp"

using namespace ptorsion;
using testing::P;
using testing::poly;

namespace {

RatPoly var(int n, int i) { return RatPoly::variable(RatPoly::in_x(n).names(), i); }
RatPoly one(int n) { return RatPoly::constant(RatPoly::in_x(n).names(), UniRat(1)); }

} // namespace

TEST_CASE("rlambda_poly small shapes") {
    const UniRat t = UniRat::param('t');
    CHECK(rlambda_poly(P("1"), 1) == var(1, 0) - one(1));
    CHECK(rlambda_poly(P("2"), 2) == var(2, 1) - var(2, 0));
    CHECK(rlambda_poly(P("2,1"), 2) == (var(2, 0) - one(2).scaled(t)) * (var(2, 1) - var(2, 0)));
    CHECK(rlambda_poly(P("2")) == rlambda_poly(P("2"), 2));
    CHECK_THROWS_AS(rlambda_poly(P("3"), 2), DimensionError);
    CHECK_THROWS_AS(monomial_exponent(P("3"), 2), DimensionError);
}

TEST_CASE("rlambda_expand") {
    const auto e = rlambda_expand(P("1,1"));
    REQUIRE(e.coeffs.size() == 3);
    CHECK(e.coeffs.at(P("1,1")) == UniRat(1));
    CHECK(e.coeffs.at(P("1")) == poly({-1, -1}, 't'));
    CHECK(e.coeffs.at(Partition()) == UniRat::param('t'));
    const auto empty = rlambda_expand(Partition());
    REQUIRE(empty.coeffs.size() == 1);
    CHECK(empty.coeffs.at(Partition()) == UniRat(1));
    const auto row = rlambda_expand(P("2"));
    CHECK(row.coeffs.at(P("2")) == UniRat(1));
    CHECK(row.coeffs.at(P("1")) == UniRat(-1));
}

TEST_CASE("c_coeff values") {
    const UniRat q = UniRat::param();
    CHECK(c_coeff(P("1,1"), P("1")) == 1 + q);
    CHECK(c_coeff(P("2,1"), P("2")) == q);
    CHECK(c_coeff(P("2,2"), P("2")) == q * (1 + q));
    CHECK(c_coeff(P("1"), P("2")).is_zero());
    for (int n = 0; n <= 6; ++n) {
        for (const auto& l : partitions_of(n)) {
            CHECK(c_coeff(l, l) == UniRat(1));
            CHECK(c_coeff(l, Partition()) == UniRat(1));
            for (const auto& mu : subpartitions(l)) {
                CHECK(c_coeff(l, mu).has_nonnegative_integer_coeffs());
                CHECK(qprime_skew(l, mu).has_nonnegative_integer_coeffs());
                CHECK(c_qprime_relation_holds(l, mu));
            }
        }
    }
}

TEST_CASE("monomial_in_R_basis") {
    for (int n = 0; n <= 4; ++n) {
        const auto e = monomial_in_R_basis(Partition(std::vector<int>(n > 0 ? 1 : 0, n)));
        CHECK(e.coeffs.size() == static_cast<std::size_t>(n + 1));
        for (const auto& [mu, c] : e.coeffs) CHECK(c == UniRat(1));
    }
    const auto ones = monomial_in_R_basis(P("1^4"));
    for (int k = 0; k <= 4; ++k) CHECK(ones.coeffs.at(Partition(std::vector<int>(k, 1))) == qbinomial(4, k));
    const UniRat q = UniRat::param();
    const auto sq = monomial_in_R_basis(P("2,2"));
    CHECK(sq.coeffs.size() == 6);
    CHECK(sq.coeffs.at(P("2,1")) == 1 + q);
    CHECK(sq.coeffs.at(P("2")) == q * (1 + q));
    CHECK(sq.coeffs.at(P("1,1")) == UniRat(1));
    CHECK(sq.coeffs.at(P("1")) == 1 + q);
}

TEST_CASE("inversion round-trip reproduces the monomial") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& l : partitions_of(n, 3)) {
            const int ell = 3;
            RatPoly sum(RatPoly::in_x(ell).names());
            for (const auto& mu : subpartitions(l)) {
                sum += to_mpoly(rlambda_expand(mu), ell).scaled(c_coeff(l, mu).renamed('t'));
            }
            RatPoly mono = RatPoly::term(RatPoly::in_x(ell).names(), monomial_exponent(l, ell), UniRat(1));
            CHECK(sum == mono);
        }
    }
}

TEST_CASE("mirror_poly") {
    const UniRat q = UniRat::param();
    const auto m = mirror_poly(P("1,1"));
    REQUIRE(m.coeffs.size() == 3);
    CHECK(m.coeffs[1] == 1 + q);
    CHECK(m.palindromic);
    CHECK(mirror_poly(Partition()).coeffs.size() == 1);
    const auto m21 = mirror_poly(P("2,1"));
    CHECK(m21.coeffs[1] == 1 + q);
    CHECK(m21.coeffs[2] == 1 + q);
    CHECK(m21.palindromic);
}

TEST_CASE("qprime_skew and dot products") {
    const UniRat q = UniRat::param();
    CHECK(qprime_skew(P("1,1"), P("1")) == 1 + q);
    CHECK(qprime_skew(P("1"), P("1")) == UniRat(1));
    CHECK(qprime_skew(P("3,1"), Partition()) == q.pow(static_cast<int>(nstat(P("3,1")))));
    CHECK(qprime_skew(P("1"), P("2")).is_zero());
    CHECK(dot_product_conjugates(P("1,1"), P("1,1")) == 4);
    CHECK(dot_product_conjugates(P("2,1"), P("1")) == 2);
    CHECK(dot_product_conjugates(P("2,1"), Partition()) == 0);
}
