#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptorsion/errors.hpp"
#include "ptorsion/group_oracle.hpp"
#include "ptorsion/identity_suite.hpp"
#include "ptorsion/json_io.hpp"
#include "ptorsion/moments.hpp"
#include "ptorsion/partition.hpp"
#include "ptorsion/rlambda.hpp"
#include "ptorsion/version.hpp"

namespace {

using ptorsion::json::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct CliConfig {
    std::string format = "text";
    std::uint64_t max_group_order = 4096;
    int max_truncation = 12;
    std::uint64_t seed = 0;
    int verbosity = 0;
};

/// Bounds from PTORSION_BOUNDS="max_group_order=N,max_truncation=M" replace the built-in defaults.
void apply_env_bounds(CliConfig& cfg) {
    const char* env = std::getenv("PTORSION_BOUNDS");
    if (!env) return;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ptorsion::ParseError("PTORSION_BOUNDS entries must be key=value");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        try {
            if (key == "max_group_order") {
                cfg.max_group_order = std::stoull(value);
            } else if (key == "max_truncation") {
                cfg.max_truncation = std::stoi(value);
            } else {
                throw ptorsion::ParseError("unknown bound '" + key + "' in PTORSION_BOUNDS");
            }
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const ptorsion::ParseError*>(&e)) throw;
            throw ptorsion::ParseError("malformed value for " + key + " in PTORSION_BOUNDS");
        }
    }
}

std::string canonical(const ptorsion::Partition& p) { return p.empty() ? std::string() : ptorsion::to_string(p); }

json metadata(const CliConfig& cfg, const std::vector<std::string>& argv) {
    return json{{"command", argv},
                {"version", std::string(ptorsion::kVersion)},
                {"seed", cfg.seed},
                {"bounds", {{"max_group_order", cfg.max_group_order}, {"max_truncation", cfg.max_truncation}}}};
}

ptorsion::ResourceLimits oracle_limits(const CliConfig& cfg) {
    ptorsion::ResourceLimits lim;
    lim.max_group_order = cfg.max_group_order;
    return lim;
}

void emit(const CliConfig& cfg, json doc, const std::vector<std::string>& argv, const std::string& text) {
    if (cfg.format == "json") {
        doc["meta"] = metadata(cfg, argv);
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

long require_prime(long p) {
    if (!ptorsion::is_prime(p)) throw ptorsion::ParseError("p must be prime, got " + std::to_string(p));
    return p;
}

ptorsion::ConjectureKind parse_kind(const std::string& s) {
    static const std::map<std::string, ptorsion::ConjectureKind> kinds{
        {"class-imaginary", ptorsion::ConjectureKind::ClassGroupImaginary},
        {"class-real", ptorsion::ConjectureKind::ClassGroupReal},
        {"sha", ptorsion::ConjectureKind::Sha},
        {"selmer", ptorsion::ConjectureKind::Selmer},
    };
    const auto it = kinds.find(s);
    if (it == kinds.end()) throw ptorsion::ParseError("unknown conjecture kind '" + s + "'");
    return it->second;
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) row += ',';
        const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
        if (quote) {
            row += '"';
            for (char c : cells[i]) row += c == '"' ? std::string("\"\"") : std::string(1, c);
            row += '"';
        } else {
            row += cells[i];
        }
    }
    return row + '\n';
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    CliConfig cfg;
    try {
        apply_env_bounds(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App app{"Exact moments of p-torsion in random finite abelian p-groups and the identities behind them"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--max-group-order", cfg.max_group_order, "Largest group the brute-force oracles enumerate")
        ->capture_default_str();
    app.add_option("--max-truncation", cfg.max_truncation, "Largest z-truncation order for series checks")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for random-point strategies (echoed in output)")->capture_default_str();
    app.add_flag("-v,--verbose", cfg.verbosity, "Increase verbosity");
    app.footer("Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource bound exceeded.\n"
               "PTORSION_BOUNDS=max_group_order=N,max_truncation=M overrides the default bounds.");

    // coeff
    std::string lambda_s, mu_s;
    std::optional<std::string> eval_at;
    auto* coeff = app.add_subcommand("coeff", "Print C_{lambda,mu}(q) or its value at a rational point");
    coeff->add_option("--lambda", lambda_s, "Partition, e.g. \"2,1\" or \"1^2 2\"")->required();
    coeff->add_option("--mu", mu_s, "Partition")->required();
    coeff->add_option("--eval-at", eval_at, "Rational point a/b");

    // moments
    std::string m_lambda;
    long m_p = 0;
    std::string m_u = "0";
    bool m_type_s = false, m_float = false;
    std::optional<std::string> m_conj;
    auto* moments = app.add_subcommand("moments", "Exact moment of x^lambda at damping u");
    moments->add_option("--lambda", m_lambda, "Partition (empty string for the empty partition)")->required();
    moments->add_option("--p", m_p, "Prime")->required();
    moments->add_option("--u", m_u, "Damping parameter, integer or a/b")->capture_default_str();
    moments->add_flag("--type-s", m_type_s, "Groups of type S");
    moments->add_flag("--float", m_float, "Allow non-integral u via 50-digit floating point");
    moments->add_option("--conjecture", m_conj, "Attach the conjectural-context label of this kind");

    // oracle
    std::string o_check, o_lambda, o_mu;
    long o_p = 0;
    auto* oracle = app.add_subcommand("oracle", "Compare a brute-force group count with its closed form");
    oracle->add_option("--check", o_check, "subgroups | injections | aut")
        ->required()
        ->check(CLI::IsMember({"subgroups", "injections", "aut"}));
    oracle->add_option("--lambda", o_lambda, "Partition")->required();
    oracle->add_option("--mu", o_mu, "Partition (subgroups: subgroup type; injections: target group)");
    oracle->add_option("--p", o_p, "Prime")->required();

    // verify
    std::optional<std::string> v_id, v_manifest, v_lambda, v_strategy;
    bool v_all = false, v_mutate = false, v_spec_y = false;
    std::optional<int> v_n, v_k, v_ell, v_zmax, v_alpha, v_deg, v_samples, v_umax, v_budget;
    std::optional<long> v_p;
    unsigned v_threads = 1;
    auto* verify = app.add_subcommand("verify", "Run identity checks");
    verify->add_option("--id", v_id, "Identity id, e.g. QBIN or UMOY_ABELIAN");
    verify->add_flag("--all", v_all, "Run every case of the manifest");
    verify->add_option("--manifest", v_manifest, "Manifest file (default: built-in grid)");
    verify->add_option("--n", v_n);
    verify->add_option("--k", v_k);
    verify->add_option("--ell", v_ell);
    verify->add_option("--lambda", v_lambda);
    verify->add_option("--p", v_p);
    verify->add_option("--zmax", v_zmax);
    verify->add_option("--alphabet", v_alpha);
    verify->add_option("--degree", v_deg);
    verify->add_option("--samples", v_samples);
    verify->add_option("--umax", v_umax);
    verify->add_flag("--specialize-y", v_spec_y);
    verify->add_option("--strategy", v_strategy, "symbolic_exact | truncated_series | random_point");
    verify->add_flag("--mutate", v_mutate, "Negate one right-hand coefficient (the check must then fail)");
    verify->add_option("--threads", v_threads, "Worker threads")->capture_default_str();
    verify->add_option("--budget", v_budget, "Time budget in seconds; later cases are skipped");

    // table
    std::string t_kind, t_lambda;
    long t_p = 0, t_u = 0;
    int t_ell = 1, t_m = 0;
    auto* table = app.add_subcommand("table", "Predicted averages from the Cohen-Lenstra type heuristics");
    table->add_option("--conjecture", t_kind, "class-imaginary | class-real | sha | selmer")->required();
    table->add_option("--lambda", t_lambda, "Partition");
    table->add_option("--p", t_p, "Prime")->required();
    table->add_option("--u", t_u, "Rank (sha)")->capture_default_str();
    table->add_option("--ell", t_ell, "Selmer box width")->capture_default_str();
    table->add_option("--m", t_m, "Selmer box height")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*coeff) {
            const auto lambda = ptorsion::parse_partition(lambda_s);
            const auto mu = ptorsion::parse_partition(mu_s);
            const ptorsion::UniRat& c = ptorsion::c_coeff(lambda, mu);
            json doc{{"lambda", canonical(lambda)}, {"mu", canonical(mu)}, {"coeffs", ptorsion::json::coefficients(c.num())}};
            std::string text;
            if (eval_at) {
                const mpq_class at = ptorsion::json::parse_fraction(json(*eval_at));
                const mpq_class v = c.evaluate(at);
                doc["eval_at"] = ptorsion::json::fraction(at);
                doc["value"] = ptorsion::json::fraction(v);
                text = v.get_str() + "\n";
            } else {
                text = c.to_string() + "\n";
            }
            if (cfg.format == "csv") {
                text = csv_row({"lambda", "mu", eval_at ? "value" : "polynomial"}) +
                       csv_row({canonical(lambda), canonical(mu), text.substr(0, text.size() - 1)});
            }
            emit(cfg, doc, args, text);
            return kExitPass;
        }

        if (*moments) {
            ptorsion::MomentQuery query;
            query.lambda = ptorsion::parse_partition(m_lambda);
            query.p = require_prime(m_p);
            query.flavor = m_type_s ? ptorsion::Flavor::TypeS : ptorsion::Flavor::Abelian;
            const mpq_class u = ptorsion::json::parse_fraction(json(m_u));
            if (u < 0) throw ptorsion::ParseError("u must be nonnegative");
            json doc{{"lambda", canonical(query.lambda)}, {"p", query.p}, {"u", ptorsion::json::fraction(u)},
                     {"flavor", m_type_s ? "type_s" : "abelian"}};
            std::string exact_s, float_s;
            if (u.get_den() == 1) {
                query.u = u;
                const mpq_class v = ptorsion::moment(query);
                exact_s = v.get_str();
                float_s = ptorsion::to_decimal(v);
                doc["value"] = ptorsion::json::fraction(v);
            } else if (m_float) {
                const ptorsion::BigFloat uf = ptorsion::BigFloat(u.get_num().get_str()) / ptorsion::BigFloat(u.get_den().get_str());
                float_s = ptorsion::moment_float(query.lambda, query.p, uf, query.flavor).str(30);
                doc["value"] = nullptr;
            } else {
                throw ptorsion::ModeError("non-integral u needs --float");
            }
            doc["float"] = float_s;
            if (m_conj) {
                doc["label"] = ptorsion::to_string(parse_kind(*m_conj)) + " (conjectural prediction)";
                doc["conjectural"] = true;
            }
            std::string text = exact_s.empty() ? float_s + "\n" : exact_s + "  (" + float_s + ")\n";
            if (cfg.format == "csv") {
                text = csv_row({"lambda", "p", "u", "flavor", "exact", "float"}) +
                       csv_row({canonical(query.lambda), std::to_string(query.p), u.get_str(),
                                m_type_s ? "type_s" : "abelian", exact_s, float_s});
            }
            emit(cfg, doc, args, text);
            return kExitPass;
        }

        if (*oracle) {
            const auto lambda = ptorsion::parse_partition(o_lambda);
            const long p = require_prime(o_p);
            mpz_class brute, formula;
            std::string what;
            if (o_check == "subgroups") {
                const auto mu = ptorsion::parse_partition(o_mu);
                ptorsion::PGroup h(p, lambda, oracle_limits(cfg));
                brute = ptorsion::count_subgroups_of_type(h, mu);
                formula = ptorsion::c_coeff(lambda, mu).evaluate(mpq_class(p)).get_num();
                what = "subgroups of type " + canonical(mu) + " in H_" + canonical(lambda);
            } else if (o_check == "injections") {
                const auto mu = ptorsion::parse_partition(o_mu);
                ptorsion::PGroup h(p, mu, oracle_limits(cfg));
                brute = ptorsion::count_injective_homs(lambda, h);
                const int ell = std::max(lambda.largest(), mu.largest());
                formula = ptorsion::eval_on_group(ptorsion::specialize_parameter(ptorsion::rlambda_poly(lambda, ell), p), h)
                              .get_num();
                what = "injections H_" + canonical(lambda) + " -> H_" + canonical(mu);
            } else {
                ptorsion::PGroup h(p, lambda, oracle_limits(cfg));
                brute = ptorsion::count_injective_homs(lambda, h);
                formula = ptorsion::aut_order(lambda, p);
                what = "automorphisms of H_" + canonical(lambda);
            }
            const bool pass = brute == formula;
            json doc{{"check", o_check}, {"what", what}, {"p", p}, {"oracle", ptorsion::json::integer(brute)},
                     {"formula", ptorsion::json::integer(formula)}, {"status", pass ? "PASS" : "FAIL"}};
            std::string text = brute.get_str() + " vs " + formula.get_str() + " " + (pass ? "PASS" : "FAIL") + "\n";
            if (cfg.format == "csv") {
                text = csv_row({"check", "what", "p", "oracle", "formula", "status"}) +
                       csv_row({o_check, what, std::to_string(p), brute.get_str(), formula.get_str(), pass ? "PASS" : "FAIL"});
            }
            emit(cfg, doc, args, text);
            return pass ? kExitPass : kExitFail;
        }

        if (*verify) {
            ptorsion::SuiteOptions options;
            options.threads = v_threads;
            options.limits.max_zmax = cfg.max_truncation;
            if (v_budget) options.budget = std::chrono::seconds(*v_budget);
            std::vector<ptorsion::IdentityCase> cases;
            if (v_all || v_manifest) {
                if (v_manifest) {
                    std::ifstream in(*v_manifest);
                    if (!in) throw ptorsion::ParseError("cannot read manifest " + *v_manifest);
                    std::stringstream buf;
                    buf << in.rdbuf();
                    cases = ptorsion::parse_manifest(buf.str());
                } else {
                    cases = ptorsion::default_suite();
                }
                if (v_id) options.filter.push_back(ptorsion::parse_identity_id(*v_id));
                if (v_mutate) {
                    for (auto& c : cases) c.mutate = true;
                }
            } else if (v_id) {
                ptorsion::IdentityCase c;
                c.id = ptorsion::parse_identity_id(*v_id);
                c.strategy = v_strategy ? ptorsion::parse_strategy(*v_strategy)
                                        : (c.id == ptorsion::IdentityId::QBIN || c.id == ptorsion::IdentityId::CSQ ||
                                                   c.id == ptorsion::IdentityId::FINITE_QBINHL
                                               ? ptorsion::Strategy::SymbolicExact
                                               : ptorsion::Strategy::TruncatedSeries);
                c.seed = cfg.seed;
                c.mutate = v_mutate;
                auto& p = c.params;
                p.n = v_n;
                p.k = v_k;
                p.ell = v_ell;
                if (v_lambda) p.lambda = ptorsion::parse_partition(*v_lambda);
                p.p = v_p;
                p.zmax = v_zmax;
                p.alphabet = v_alpha;
                p.degree = v_deg;
                p.samples = v_samples;
                p.umax = v_umax;
                p.specialize_y = v_spec_y;
                cases.push_back(c);
            } else {
                throw ptorsion::ParseError("verify needs --id or --all");
            }

            std::vector<ptorsion::VerificationReport> reports;
            // A single case reports bound violations through the exit code.
            if (cases.size() == 1 && !v_all && !v_manifest) {
                reports.push_back(ptorsion::verify(cases.front(), options.limits));
            } else {
                reports = ptorsion::run_suite(cases, options);
            }
            bool ok = true;
            json list = json::array();
            std::string text;
            if (cfg.format == "csv") text = csv_row({"id", "params", "status", "location", "lhs", "rhs", "seconds"});
            for (const auto& r : reports) {
                ok = ok && (r.status == ptorsion::ReportStatus::Pass || r.status == ptorsion::ReportStatus::Skipped);
                list.push_back(ptorsion::json::to_json(r));
                const std::string params = ptorsion::describe(r.kase);
                std::ostringstream secs;
                secs.precision(3);
                secs << std::fixed << r.seconds;
                if (cfg.format == "csv") {
                    text += csv_row({ptorsion::to_string(r.kase.id), params, ptorsion::to_string(r.status),
                                     r.mismatch ? r.mismatch->location : "", r.mismatch ? r.mismatch->lhs : "",
                                     r.mismatch ? r.mismatch->rhs : "", secs.str()});
                    continue;
                }
                text += ptorsion::to_string(r.status) + " " + ptorsion::to_string(r.kase.id) + " " + params + " [" +
                        std::to_string(r.coefficients_compared) + " coefficients, " + secs.str() + "s]\n";
                if (r.mismatch) {
                    text += "  first mismatch at " + r.mismatch->location + "\n    lhs: " + r.mismatch->lhs +
                            "\n    rhs: " + r.mismatch->rhs + "\n";
                }
                if (r.mutated_location) text += "  mutated coefficient: " + *r.mutated_location + "\n";
                if (r.status == ptorsion::ReportStatus::Error || cfg.verbosity > 0) text += "  " + r.message + "\n";
            }
            emit(cfg, json{{"reports", list}, {"all_pass", ok}}, args, text);
            return ok ? kExitPass : kExitFail;
        }

        if (*table) {
            const auto kind = parse_kind(t_kind);
            const long p = require_prime(t_p);
            const auto lambda = ptorsion::parse_partition(t_lambda);
            const auto v = ptorsion::conjecture_table(kind, lambda, p, t_u, t_ell, t_m);
            const std::string lam = kind == ptorsion::ConjectureKind::Selmer
                                        ? std::to_string(t_ell) + "^" + std::to_string(t_m)
                                        : canonical(lambda);
            const std::string fl = ptorsion::to_decimal(v.value);
            json row{{"kind", ptorsion::to_string(kind)}, {"lambda", lam}, {"p", p}, {"u", t_u},
                     {"value", ptorsion::json::fraction(v.value)}, {"float", fl}, {"conjectural", v.conjectural},
                     {"out_of_stated_range", v.out_of_stated_range}, {"label", v.label}};
            std::string text;
            if (cfg.format == "csv") {
                text = csv_row({"kind", "lambda", "p", "u", "exact", "float", "conjectural", "out_of_stated_range"}) +
                       csv_row({ptorsion::to_string(kind), lam, std::to_string(p), std::to_string(t_u),
                                v.value.get_str(), fl, v.conjectural ? "true" : "false",
                                v.out_of_stated_range ? "true" : "false"});
            } else {
                text = v.value.get_str() + "  (" + fl + ")  " + v.label +
                       (v.out_of_stated_range ? "  [warning: outside the conjecture's stated range]" : "") + "\n";
            }
            emit(cfg, json{{"rows", json::array({row})}}, args, text);
            return kExitPass;
        }
    } catch (const ptorsion::ResourceLimitError& e) {
        std::cerr << "resource bound exceeded (" << e.bound() << "): " << e.what() << '\n';
        return kExitBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
