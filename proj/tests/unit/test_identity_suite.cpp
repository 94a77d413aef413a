#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "ptorsion/errors.hpp"
#include "ptorsion/identity_suite.hpp"
#include "ptorsion/json_io.hpp"
#include "test_helpers.hpp"

using namespace ptorsion;
using testing::P;

namespace {

IdentityCase make(IdentityId id, Strategy s = Strategy::TruncatedSeries) {
    IdentityCase c;
    c.id = id;
    c.strategy = s;
    return c;
}

} // namespace

TEST_CASE("spec examples") {
    auto c = make(IdentityId::QBIN, Strategy::SymbolicExact);
    c.params.n = 4;
    CHECK(verify(c).status == ReportStatus::Pass);

    c = make(IdentityId::UMOY_ABELIAN);
    c.params.ell = 1;
    c.params.lambda = P("1");
    c.params.zmax = 5;
    CHECK(verify(c).status == ReportStatus::Pass);

    c = make(IdentityId::CSQ, Strategy::SymbolicExact);
    c.params.n = 2;
    c.params.k = 1;
    CHECK(verify(c).status == ReportStatus::Pass);
}

TEST_CASE("every identity id has at least three default grid points") {
    std::map<IdentityId, int> count;
    for (const auto& c : default_suite()) ++count[c.id];
    for (IdentityId id : all_identity_ids()) CHECK(count[id] >= 3);
}

TEST_CASE("embedded manifest matches the checked-in file") {
    std::ifstream in(PTORSION_MANIFEST_PATH);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == default_manifest_text());
}

TEST_CASE("mutation produces a localized failure") {
    auto c = make(IdentityId::DELAUNAY);
    c.params.ell = 2;
    c.params.zmax = 6;
    c.mutate = true;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        c.seed = seed;
        const auto r = verify(c);
        CHECK(r.status == ReportStatus::Fail);
        REQUIRE(r.mismatch);
        REQUIRE(r.mutated_location);
        CHECK(r.mismatch->location == *r.mutated_location);
    }
}

TEST_CASE("resource bounds are enforced") {
    auto c = make(IdentityId::WARNAAR_A2);
    c.params.alphabet = 5;
    c.params.degree = 3;
    CHECK_THROWS_AS(verify(c), ResourceLimitError);
    c = make(IdentityId::EULER);
    c.params.zmax = 13;
    CHECK_THROWS_AS(verify(c), ResourceLimitError);
    c = make(IdentityId::FINITE_QBINHL, Strategy::SymbolicExact);
    c.params.n = 4;
    c.params.k = 1;
    CHECK_THROWS_AS(verify(c), ResourceLimitError);
    c = make(IdentityId::QBIN, Strategy::RandomPoint);
    c.params.n = 3;
    CHECK_THROWS_AS(verify(c), ModeError);
}

TEST_CASE("malformed cases become error reports") {
    auto c = make(IdentityId::UMOY_ABELIAN);
    c.params.ell = 1;
    c.params.lambda = P("2");
    c.params.zmax = 4;
    CHECK(verify(c).status == ReportStatus::Error);
    auto d = make(IdentityId::QBIN);
    CHECK(verify(d).status == ReportStatus::Error);
}

TEST_CASE("run_suite filters, sorts and respects the budget") {
    SuiteOptions opt;
    opt.filter = {IdentityId::MIRROR_SWAP, IdentityId::EULER};
    opt.threads = 4;
    const auto reports = run_suite(default_suite(), opt);
    REQUIRE(reports.size() == 6);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].status == ReportStatus::Pass);
        CHECK(reports[i].kase.id == (i < 3 ? IdentityId::EULER : IdentityId::MIRROR_SWAP));
    }
    CHECK(reports[2].kase.params.zmax == 10);

    opt.filter.clear();
    opt.budget = std::chrono::seconds(0);
    const auto skipped = run_suite(default_suite(), opt);
    for (const auto& r : skipped) CHECK(r.status == ReportStatus::Skipped);
}

TEST_CASE("random-point runs are deterministic in the seed") {
    auto c = make(IdentityId::FINITE_QBINHL, Strategy::RandomPoint);
    c.params.n = 3;
    c.params.k = 1;
    c.params.samples = 3;
    c.seed = 99;
    const auto a = verify(c);
    const auto b = verify(c);
    CHECK(a.status == ReportStatus::Pass);
    CHECK(a.coefficients_compared == b.coefficients_compared);
}

TEST_CASE("manifest parsing") {
    const auto cases = parse_manifest(R"({"version":1,"cases":[{"id":"QBIN","params":{"n":3}}]})");
    REQUIRE(cases.size() == 1);
    CHECK(cases[0].strategy == Strategy::SymbolicExact);
    CHECK_THROWS_AS(parse_manifest("{"), ParseError);
    CHECK_THROWS_AS(parse_manifest(R"({"cases":[{"id":"NOPE"}]})"), ParseError);
    CHECK_THROWS_AS(parse_manifest(R"({"cases":[{"id":"QBIN","params":{"m":2}}]})"), ParseError);
    // Round trip through JSON rendering.
    for (const auto& c : default_suite()) {
        const auto again = parse_manifest(nlohmann::json{{"cases", {json::to_json(c)}}}.dump());
        CHECK(describe(again.at(0)) == describe(c));
    }
    CHECK_THROWS_AS(parse_identity_id("qbin"), ParseError);
}
