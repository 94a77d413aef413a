#include <doctest.h>

#include "ptorsion/errors.hpp"
#include "ptorsion/group_oracle.hpp"
#include "ptorsion/rlambda.hpp"
#include "test_helpers.hpp"

using namespace ptorsion;
using testing::P;

TEST_CASE("group arithmetic") {
    const PGroup h(2, P("2,1"));
    CHECK(h.order() == 8);
    for (std::uint64_t a = 0; a < h.order(); ++a) {
        CHECK(h.add(a, h.negate(a)) == 0);
        CHECK(h.index_of(h.element(a)) == a);
        CHECK(h.multiple(a, h.element_order(a)) == 0);
        CHECK(h.p_power_multiple(a, 2) == 0);
    }
    CHECK_THROWS_AS(PGroup(2, P("13")), ResourceLimitError);
    try {
        PGroup(2, P("13"));
    } catch (const ResourceLimitError& e) {
        CHECK(e.bound() == "max_group_order");
    }
}

TEST_CASE("torsion orders") {
    const PGroup h(2, P("2,1"));
    CHECK(torsion_order(h, 1) == 4);
    CHECK(torsion_order(h, 2) == 8);
    CHECK(torsion_order(h, 0) == 1);
    for (int k = 0; k <= 3; ++k) CHECK(torsion_order_brute(h, k) == torsion_order(h, k));
}

TEST_CASE("automorphism orders") {
    CHECK(aut_order(P("1,1"), 2) == 6);
    CHECK(aut_order(P("1"), 3) == 2);
    CHECK(aut_order(Partition(), 5) == 1);
    CHECK(auts_order(P("1"), 2) == 6);
    CHECK(auts_order(Partition(), 2) == 1);
    CHECK(auts_order(P("1"), 3) == 24);
}

TEST_CASE("subgroup enumeration") {
    const auto klein = enumerate_subgroups(PGroup(2, P("1,1")));
    CHECK(klein.at(Partition()) == 1);
    CHECK(klein.at(P("1")) == 3);
    CHECK(klein.at(P("1,1")) == 1);
    const auto cyc = enumerate_subgroups(PGroup(3, P("2")));
    CHECK(cyc.size() == 3);
    CHECK(count_subgroups_of_type(PGroup(2, P("1,1")), P("1")) == 3);
    CHECK(count_subgroups_of_type(PGroup(2, P("2,1")), P("1,1")) == 1);
    CHECK(count_subgroups_of_type(PGroup(2, P("2,1")), P("3")) == 0);
    for (const auto& l : {P("2,1"), P("3,1"), P("2,2")}) CHECK(count_subgroups_of_type(PGroup(2, l), l) == 1);
}

TEST_CASE("subgroup counts are symmetric in size") {
    for (long p : {2L, 3L}) {
        for (int n = 0; n <= 4; ++n) {
            for (const auto& l : partitions_of(n)) {
                const auto all = enumerate_subgroups(PGroup(p, l));
                std::vector<mpz_class> by_size(n + 1);
                for (const auto& [mu, c] : all) by_size[mu.size()] += c;
                for (int k = 0; k <= n; ++k) CHECK(by_size[k] == by_size[n - k]);
            }
        }
    }
}

TEST_CASE("injective homomorphisms") {
    CHECK(count_injective_homs(P("1"), PGroup(2, P("2"))) == 1);
    CHECK(count_injective_homs(P("1,1"), PGroup(2, P("1"))) == 0);
    CHECK(count_injective_homs(P("1,1"), PGroup(2, P("1,1"))) == 6);
    for (const auto& [l, m] : std::vector<std::pair<Partition, Partition>>{
             {P("1"), P("2,1")}, {P("2"), P("2,1")}, {P("1,1"), P("2,1")}, {P("2,1"), P("2,2")}}) {
        const PGroup h(2, m);
        CHECK(count_injective_homs(l, h) == count_injective_homs_naive(l, h));
    }
}

TEST_CASE("injections equal automorphisms times subgroup count") {
    for (long p : {2L, 3L}) {
        for (const auto& [l, m] : std::vector<std::pair<Partition, Partition>>{
                 {P("1"), P("1,1")}, {P("1,1"), P("2,1")}, {P("2"), P("2,1")}, {P("1"), P("3")}}) {
            const PGroup h(p, m);
            CHECK(count_injective_homs(l, h) == aut_order(l, p) * count_subgroups_of_type(h, l));
        }
    }
}

TEST_CASE("eval_on_group") {
    const PGroup h(2, P("2,1"));
    const auto names = RatPoly::in_x(2).names();
    CHECK(eval_on_group(RatPoly::variable(names, 0), h) == 4);
    CHECK(eval_on_group(RatPoly::constant(names, UniRat(1)), h) == 1);
    const RatPoly r1 = specialize_parameter(rlambda_poly(P("1"), 1), 3);
    CHECK(eval_on_group(r1, PGroup(3, P("1,1"))) == 8);
    CHECK_THROWS_AS(eval_on_group(rlambda_poly(P("1,1"), 1), PGroup(3, P("1,1"))), ParameterMismatch);
}
