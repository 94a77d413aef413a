#include "ptorsion/identity_suite.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "identity_cases.hpp"
#include "ptorsion/errors.hpp"

namespace ptorsion {

namespace {

const std::vector<std::pair<IdentityId, const char*>>& id_names() {
    static const std::vector<std::pair<IdentityId, const char*>> names{
        {IdentityId::QBIN, "QBIN"},
        {IdentityId::EULER, "EULER"},
        {IdentityId::GENFUN, "GENFUN"},
        {IdentityId::COMBINAT, "COMBINAT"},
        {IdentityId::UMOY_ABELIAN, "UMOY_ABELIAN"},
        {IdentityId::UMOY_TYPE_S, "UMOY_TYPE_S"},
        {IdentityId::DELAUNAY, "DELAUNAY"},
        {IdentityId::QBINHL, "QBINHL"},
        {IdentityId::WARNAAR_A2, "WARNAAR_A2"},
        {IdentityId::LASCOUX, "LASCOUX"},
        {IdentityId::FINITE_QBINHL, "FINITE_QBINHL"},
        {IdentityId::CSQ, "CSQ"},
        {IdentityId::MIRROR_SWAP, "MIRROR_SWAP"},
    };
    return names;
}

void check_bound(bool ok, const char* bound, const std::string& detail) {
    if (!ok) throw ResourceLimitError(bound, detail);
}

void validate(const IdentityCase& c, const SuiteLimits& lim) {
    const CaseParams& p = c.params;
    if (c.strategy == Strategy::RandomPoint && c.id != IdentityId::FINITE_QBINHL) {
        throw ModeError("random_point is only available for FINITE_QBINHL");
    }
    if (p.zmax) check_bound(*p.zmax <= lim.max_zmax, "max_zmax", "zmax=" + std::to_string(*p.zmax));
    if (p.alphabet) {
        check_bound(*p.alphabet <= lim.max_alphabet, "max_alphabet", "alphabet=" + std::to_string(*p.alphabet));
    }
    if (p.degree) check_bound(*p.degree <= lim.max_degree, "max_degree", "degree=" + std::to_string(*p.degree));
    if (c.id == IdentityId::QBIN && p.n) check_bound(*p.n <= lim.max_zmax, "max_zmax", "n=" + std::to_string(*p.n));
    if (c.id == IdentityId::FINITE_QBINHL || c.id == IdentityId::CSQ) {
        if (p.n) check_bound(*p.n <= lim.max_finite_n, "max_finite_n", "n=" + std::to_string(*p.n));
        if (p.k) check_bound(*p.k <= lim.max_finite_k, "max_finite_k", "k=" + std::to_string(*p.k));
        if (c.id == IdentityId::FINITE_QBINHL && c.strategy != Strategy::RandomPoint && p.n) {
            check_bound(*p.n <= lim.max_symbolic_finite_n, "max_symbolic_finite_n",
                        "n=" + std::to_string(*p.n) + " needs the random_point strategy");
        }
    }
    for (const auto* v : {&p.n, &p.k, &p.ell, &p.zmax, &p.alphabet, &p.degree, &p.umax}) {
        if (*v && **v < 0) throw DimensionError("case parameters must be nonnegative");
    }
    if (p.alphabet && *p.alphabet < 1) throw DimensionError("alphabet must be positive");
    if (p.samples && *p.samples < 1) throw DimensionError("samples must be positive");
}

} // namespace

std::string to_string(IdentityId id) {
    for (const auto& [v, name] : id_names()) {
        if (v == id) return name;
    }
    return "UNKNOWN";
}

std::string to_string(Strategy s) {
    switch (s) {
    case Strategy::SymbolicExact: return "symbolic_exact";
    case Strategy::TruncatedSeries: return "truncated_series";
    case Strategy::RandomPoint: return "random_point";
    }
    return "unknown";
}

std::string to_string(ReportStatus s) {
    switch (s) {
    case ReportStatus::Pass: return "PASS";
    case ReportStatus::Fail: return "FAIL";
    case ReportStatus::Error: return "ERROR";
    case ReportStatus::Skipped: return "SKIPPED";
    }
    return "UNKNOWN";
}

IdentityId parse_identity_id(const std::string& name) {
    for (const auto& [v, n] : id_names()) {
        if (name == n) return v;
    }
    throw ParseError("unknown identity id '" + name + "'");
}

Strategy parse_strategy(const std::string& name) {
    for (Strategy s : {Strategy::SymbolicExact, Strategy::TruncatedSeries, Strategy::RandomPoint}) {
        if (to_string(s) == name) return s;
    }
    throw ParseError("unknown strategy '" + name + "'");
}

const std::vector<IdentityId>& all_identity_ids() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& [id, name] : id_names()) v.push_back(id);
        return v;
    }();
    return ids;
}

std::string describe(const IdentityCase& c) {
    const CaseParams& p = c.params;
    std::ostringstream os;
    auto field = [&](const char* name, const auto& v) {
        if (v) os << (os.tellp() > 0 ? " " : "") << name << '=' << *v;
    };
    field("n", p.n);
    field("k", p.k);
    field("ell", p.ell);
    if (p.lambda) os << (os.tellp() > 0 ? " " : "") << "lambda=" << (p.lambda->empty() ? "0" : to_string(*p.lambda));
    field("p", p.p);
    field("zmax", p.zmax);
    field("alphabet", p.alphabet);
    field("degree", p.degree);
    field("samples", p.samples);
    field("umax", p.umax);
    if (p.specialize_y) os << " specialize_y";
    return os.str();
}

VerificationReport verify(const IdentityCase& c, const SuiteLimits& limits) {
    validate(c, limits);
    VerificationReport report;
    report.kase = c;
    const auto start = std::chrono::steady_clock::now();
    try {
        detail::SideTable t = detail::build_sides(c);
        if (c.mutate) {
            if (t.rhs.empty()) {
                report.message = "nothing to mutate: the right-hand side is zero";
            } else {
                auto it = t.rhs.begin();
                std::advance(it, static_cast<long>(c.seed % t.rhs.size()));
                it->second = -it->second;
                report.mutated_location = detail::render_key(t.axis, it->first);
            }
        }
        std::set<std::vector<int>> keys;
        for (const auto& [k, v] : t.lhs) keys.insert(k);
        for (const auto& [k, v] : t.rhs) keys.insert(k);
        report.status = ReportStatus::Pass;
        const UniRat zero;
        for (const auto& k : keys) {
            ++report.coefficients_compared;
            const auto l = t.lhs.find(k);
            const auto r = t.rhs.find(k);
            const UniRat& lv = l == t.lhs.end() ? zero : l->second;
            const UniRat& rv = r == t.rhs.end() ? zero : r->second;
            if (!(lv == rv)) {
                report.status = ReportStatus::Fail;
                report.mismatch = Mismatch{detail::render_key(t.axis, k), lv.to_string(), rv.to_string()};
                break;
            }
        }
        if (report.message.empty()) {
            report.message = report.status == ReportStatus::Pass ? "all coefficients agree" : "coefficient mismatch";
        }
    } catch (const ResourceLimitError&) {
        throw;
    } catch (const std::exception& e) {
        report.status = ReportStatus::Error;
        report.message = e.what();
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

template <class T>
std::optional<T> opt_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    return j.at(key).get<T>();
}

IdentityCase parse_case(const nlohmann::json& j) {
    static const std::set<std::string> known{"n", "k", "ell", "lambda", "p", "zmax", "alphabet",
                                             "degree", "samples", "umax", "specialize_y"};
    IdentityCase c;
    c.id = parse_identity_id(j.at("id").get<std::string>());
    c.strategy = parse_strategy(j.value("strategy", std::string("symbolic_exact")));
    c.seed = j.value("seed", std::uint64_t{0});
    c.mutate = j.value("mutate", false);
    const nlohmann::json params = j.value("params", nlohmann::json::object());
    for (const auto& [key, v] : params.items()) {
        if (!known.count(key)) throw ParseError("unknown case parameter '" + key + "'");
    }
    CaseParams& p = c.params;
    p.n = opt_field<int>(params, "n");
    p.k = opt_field<int>(params, "k");
    p.ell = opt_field<int>(params, "ell");
    if (params.contains("lambda")) p.lambda = parse_partition(params.at("lambda").get<std::string>());
    p.p = opt_field<long>(params, "p");
    p.zmax = opt_field<int>(params, "zmax");
    p.alphabet = opt_field<int>(params, "alphabet");
    p.degree = opt_field<int>(params, "degree");
    p.samples = opt_field<int>(params, "samples");
    p.umax = opt_field<int>(params, "umax");
    p.specialize_y = params.value("specialize_y", false);
    return c;
}

} // namespace

std::vector<IdentityCase> parse_manifest(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("cases") || !doc.at("cases").is_array()) {
        throw ParseError("manifest must be an object with a 'cases' array");
    }
    std::vector<IdentityCase> out;
    std::size_t index = 0;
    for (const auto& entry : doc.at("cases")) {
        try {
            out.push_back(parse_case(entry));
        } catch (const ParseError& e) {
            throw ParseError("case " + std::to_string(index) + ": " + e.what());
        } catch (const std::exception& e) {
            throw ParseError("case " + std::to_string(index) + ": " + e.what());
        }
        ++index;
    }
    return out;
}

std::vector<IdentityCase> default_suite() {
    static const std::vector<IdentityCase> cases = parse_manifest(default_manifest_text());
    return cases;
}

std::vector<VerificationReport> run_suite(const std::vector<IdentityCase>& cases, const SuiteOptions& options) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& f = options.filter;
        if (f.empty() || std::find(f.begin(), f.end(), cases[i].id) != f.end()) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return static_cast<int>(cases[a].id) < static_cast<int>(cases[b].id);
    });

    std::vector<VerificationReport> reports(order.size());
    const auto start = std::chrono::steady_clock::now();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t slot = next++; slot < order.size(); slot = next++) {
            const IdentityCase& c = cases[order[slot]];
            VerificationReport& r = reports[slot];
            if (options.budget && std::chrono::steady_clock::now() - start >= *options.budget) {
                r.kase = c;
                r.status = ReportStatus::Skipped;
                r.message = "time budget exhausted";
                continue;
            }
            try {
                r = verify(c, options.limits);
            } catch (const ResourceLimitError& e) {
                r = VerificationReport{};
                r.kase = c;
                r.status = ReportStatus::Error;
                r.message = std::string("resource limit ") + e.what();
            } catch (const std::exception& e) {
                r = VerificationReport{};
                r.kase = c;
                r.status = ReportStatus::Error;
                r.message = e.what();
            }
        }
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(order.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return reports;
}

} // namespace ptorsion
