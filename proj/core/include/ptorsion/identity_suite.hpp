#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptorsion/partition.hpp"

namespace ptorsion {

enum class IdentityId {
    QBIN,
    EULER,
    GENFUN,
    COMBINAT,
    UMOY_ABELIAN,
    UMOY_TYPE_S,
    DELAUNAY,
    QBINHL,
    WARNAAR_A2,
    LASCOUX,
    FINITE_QBINHL,
    CSQ,
    MIRROR_SWAP,
};

enum class Strategy { SymbolicExact, TruncatedSeries, RandomPoint };

/// Parameters a case may use; unused fields stay empty.
struct CaseParams {
    std::optional<int> n;          // QBIN, FINITE_QBINHL, CSQ
    std::optional<int> k;          // FINITE_QBINHL, CSQ
    std::optional<int> ell;        // UMOY_*, DELAUNAY, MIRROR_SWAP
    std::optional<Partition> lambda;
    std::optional<long> p;         // GENFUN
    std::optional<int> zmax;       // series cases
    std::optional<int> alphabet;   // QBINHL, WARNAAR_A2, LASCOUX
    std::optional<int> degree;     // QBINHL, WARNAAR_A2, LASCOUX
    std::optional<int> samples;    // FINITE_QBINHL random points
    std::optional<int> umax;       // MIRROR_SWAP
    bool specialize_y = false;     // LASCOUX with y = z, zq, zq^2, ...
};

struct IdentityCase {
    IdentityId id = IdentityId::QBIN;
    CaseParams params;
    Strategy strategy = Strategy::SymbolicExact;
    std::uint64_t seed = 0;
    /// Negates one right-hand-side coefficient before comparison.
    bool mutate = false;
};

enum class ReportStatus { Pass, Fail, Error, Skipped };

struct Mismatch {
    std::string location;  // e.g. "z^3" or "x1^2*a"
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    IdentityCase kase;
    ReportStatus status = ReportStatus::Error;
    std::optional<Mismatch> mismatch;
    std::optional<std::string> mutated_location;
    std::string message;
    std::size_t coefficients_compared = 0;
    double seconds = 0.0;
};

/// Upper limits on case parameters.
struct SuiteLimits {
    int max_alphabet = 4;
    int max_finite_n = 4;
    int max_finite_k = 3;
    int max_symbolic_finite_n = 3;
    int max_zmax = 12;
    int max_degree = 6;
};

std::string to_string(IdentityId id);
std::string to_string(Strategy s);
std::string to_string(ReportStatus s);
/// Throws ParseError for an unknown name.
IdentityId parse_identity_id(const std::string& name);
Strategy parse_strategy(const std::string& name);
const std::vector<IdentityId>& all_identity_ids();

/// Short human-readable parameter summary, e.g. "ell=2 lambda=2,1 zmax=8".
std::string describe(const IdentityCase& c);

/// Runs one case. Throws ResourceLimitError when a parameter exceeds `limits`.
VerificationReport verify(const IdentityCase& c, const SuiteLimits& limits = {});

/// Built-in default grid (identical to manifests/default_suite.json).
std::vector<IdentityCase> default_suite();
/// The manifest text embedded in the library.
const std::string& default_manifest_text();
/// Parses a manifest document; throws ParseError on malformed entries.
std::vector<IdentityCase> parse_manifest(const std::string& text);

struct SuiteOptions {
    std::vector<IdentityId> filter;  // empty means every id
    std::optional<std::chrono::seconds> budget;
    unsigned threads = 1;
    SuiteLimits limits;
};

/// Runs the cases (individual failures become reports) and returns them sorted by id, then
/// by input order. Cases not started before the budget expires are reported as Skipped.
std::vector<VerificationReport> run_suite(const std::vector<IdentityCase>& cases, const SuiteOptions& options);

} // namespace ptorsion
