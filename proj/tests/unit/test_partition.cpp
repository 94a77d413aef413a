#include <doctest.h>

#include <random>

#include "ptorsion/errors.hpp"
#include "ptorsion/partition.hpp"
#include "test_helpers.hpp"

using namespace ptorsion;
using testing::P;

TEST_CASE("parse_partition reads both text formats") {
    CHECK(P("3,1,1").parts() == std::vector<int>{3, 1, 1});
    CHECK(P("1^2 2^1").parts() == std::vector<int>{2, 1, 1});
    CHECK(P("").empty());
    CHECK(P(" 2 , 2 ").parts() == std::vector<int>{2, 2});
    CHECK_THROWS_AS(P("1,2"), ParseError);
    CHECK_THROWS_AS(P("2,0"), ParseError);
    CHECK_THROWS_AS(P("2,x"), ParseError);
    CHECK_THROWS_AS(P("2^"), ParseError);
    CHECK_THROWS_AS(P("-1"), ParseError);
}

TEST_CASE("parse errors name the offending token") {
    try {
        P("3,abc");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("abc") != std::string::npos);
    }
}

TEST_CASE("conjugate") {
    CHECK(P("3,1,1").conjugate() == P("3,1,1"));
    CHECK(P("2,1").conjugate() == P("2,1"));
    CHECK(P("4").conjugate() == P("1,1,1,1"));
    CHECK(Partition().conjugate().empty());
}

TEST_CASE("nstat") {
    CHECK(nstat(P("2,1")) == 1);
    CHECK(nstat(P("1,1,1")) == 3);
    CHECK(nstat(Partition()) == 0);
    for (int n = 0; n <= 20; ++n) {
        for_each_partition(n, std::nullopt, std::nullopt, [](const Partition& l) { (void)nstat(l); });
    }
}

TEST_CASE("contains") {
    CHECK(contains(P("2,2"), P("2,1")));
    CHECK_FALSE(contains(P("2,2"), P("3")));
    CHECK(contains(P("5,3"), Partition()));
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(4).size() == 5);
    const auto five = partitions_of(5, 2);
    REQUIRE(five.size() == 3);
    CHECK(five[0] == P("2,2,1"));
    CHECK(five[1] == P("2,1,1,1"));
    CHECK(five[2] == P("1,1,1,1,1"));
    const auto zero = partitions_of(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(6, std::nullopt, 2).size() == 4);
}

TEST_CASE("subpartitions") {
    CHECK(subpartitions(P("1,1")).size() == 3);
    const auto s = subpartitions(P("2,1"));
    REQUIRE(s.size() == 5);
    CHECK(s.front().empty());
    CHECK(s.back() == P("2,1"));
    CHECK(subpartitions(Partition()).size() == 1);
}

TEST_CASE("subpartitions agree with a brute-force filter") {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            std::size_t brute = 0;
            for (int m = 0; m <= n; ++m) {
                for (const auto& mu : partitions_of(m)) brute += contains(lambda, mu) ? 1 : 0;
            }
            CHECK(subpartitions(lambda).size() == brute);
        }
    }
}

TEST_CASE("partitions_in_box handles empty boxes") {
    CHECK(partitions_in_box(0, 3).size() == 1);
    CHECK(partitions_in_box(3, 0).size() == 1);
    CHECK(partitions_in_box(2, 2).size() == 6);
}

TEST_CASE("render and parse round-trip; conjugation is an involution") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> size(0, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        // Random partition by sorting random compositions.
        int n = size(rng);
        std::vector<int> parts;
        while (n > 0) {
            const int part = std::uniform_int_distribution<int>(1, n)(rng);
            parts.push_back(part);
            n -= part;
        }
        std::sort(parts.rbegin(), parts.rend());
        const Partition l(parts);
        CHECK(l.conjugate().conjugate() == l);
        CHECK(parse_partition(to_string(l)) == l);
        CHECK(parse_partition(to_multiplicity_string(l)) == l);
    }
}

TEST_CASE("multiplicities and conjugate parts") {
    const Partition l = P("3,3,1");
    CHECK(l.multiplicity(3) == 2);
    CHECK(l.multiplicity(2) == 0);
    CHECK(l.conj_part(1) == 3);
    CHECK(l.conj_part(3) == 2);
    CHECK(l.conj_part(4) == 0);
    CHECK(l.part(7) == 0);
    CHECK(Partition::from_multiplicities({1, 0, 2}) == l);
    CHECK(Partition::from_conjugate({3, 2, 2}) == l);
}
