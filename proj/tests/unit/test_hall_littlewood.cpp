#include <doctest.h>

#include "ptorsion/errors.hpp"
#include "ptorsion/hall_littlewood.hpp"
#include "ptorsion/qseries.hpp"
#include "test_helpers.hpp"

using namespace ptorsion;
using testing::P;

namespace {

RatPoly x(int n, int i) { return RatPoly::variable(RatPoly::in_x(n).names(), i); }

} // namespace

TEST_CASE("hl_p small values") {
    const UniRat q = UniRat::param();
    CHECK(hl_p(P("1"), 3).poly == x(3, 0) + x(3, 1) + x(3, 2));
    CHECK(hl_p(P("1,1"), 2).poly == x(2, 0) * x(2, 1));
    CHECK(hl_p(P("2"), 2).poly == x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1) + (x(2, 0) * x(2, 1)).scaled(1 - q));
    CHECK(hl_p(P("1,1,1"), 2).poly.is_zero());
    CHECK_THROWS_AS(hl_p(P("1"), kMaxHLAlphabet + 1), ResourceLimitError);
}

TEST_CASE("hl_p is symmetric and homogeneous") {
    for (int n = 1; n <= 4; ++n) {
        for (int s = 0; s <= 5; ++s) {
            for (const auto& l : partitions_of(s, std::nullopt, n)) {
                const auto& v = hl_p(l, n).poly;
                int deg = -1;
                CHECK(v.is_symmetric(0, n));
                CHECK(v.is_homogeneous(0, n, &deg));
                CHECK(deg == s);
            }
        }
    }
}

TEST_CASE("b_lambda") {
    const UniRat q = UniRat::param();
    CHECK(b_lambda(P("2,1")) == (1 - q) * (1 - q));
    CHECK(b_lambda(P("1,1")) == (1 - q) * (1 - q * q));
    CHECK(b_lambda(Partition()) == UniRat(1));
}

TEST_CASE("principal specialization") {
    const UniRat q = UniRat::param();
    const auto v = principal_spec(P("2,1"), 2);
    CHECK(v.zpow == 3);
    CHECK(v.coeff == q * (1 + q));
    CHECK(principal_spec(P("1"), 1).coeff == UniRat(1));
    CHECK(principal_spec(P("1,1"), 1).coeff.is_zero());
    // Closed form agrees with substitution (asserted inside principal_spec) for all small shapes.
    for (int n = 1; n <= 4; ++n) {
        for (int s = 0; s <= 5; ++s) {
            for (const auto& l : partitions_of(s)) CHECK_NOTHROW(principal_spec(l, n));
        }
    }
    const auto inf = principal_spec(P("2,1"), std::nullopt);
    CHECK(inf.coeff == q / ((1 - q) * (1 - q)));
}

TEST_CASE("q = 0 gives Schur, q = 1 gives monomial symmetric") {
    for (int n = 1; n <= 3; ++n) {
        for (int s = 0; s <= 4; ++s) {
            for (const auto& l : partitions_of(s, std::nullopt, n)) {
                CHECK(hl_at_q(l, n, 0) == schur_poly(l, n));
                CHECK(hl_at_q(l, n, 1) == monomial_symmetric(l, n));
            }
        }
    }
}

TEST_CASE("point evaluation matches the symbolic polynomial") {
    const std::vector<UniRat> pt{UniRat(2), UniRat(mpq_class(-1, 3)), UniRat(5)};
    for (int s = 0; s <= 4; ++s) {
        for (const auto& l : partitions_of(s, std::nullopt, 3)) {
            CHECK(hl_evaluate(l, pt) == hl_p(l, 3).poly.evaluate(pt));
        }
    }
    CHECK_THROWS_AS(hl_evaluate(P("1"), {UniRat(2), UniRat(2)}), SingularityError);
}
