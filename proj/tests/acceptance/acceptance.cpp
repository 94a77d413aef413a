// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptorsion/errors.hpp"
#include "ptorsion/group_oracle.hpp"
#include "ptorsion/hall_littlewood.hpp"
#include "ptorsion/identity_suite.hpp"
#include "ptorsion/moments.hpp"
#include "ptorsion/partition.hpp"
#include "ptorsion/qseries.hpp"
#include "ptorsion/rlambda.hpp"

using namespace ptorsion;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    int checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::vector<Partition> up_to(int n, std::optional<int> max_part = std::nullopt) {
    std::vector<Partition> out;
    for (int s = 0; s <= n; ++s) {
        for (auto& l : partitions_of(s, max_part)) out.push_back(std::move(l));
    }
    return out;
}

std::string show(const Partition& l) { return l.empty() ? std::string("()") : "(" + to_string(l) + ")"; }

/// Runs one identity case and records a failure unless it passes.
void expect_identity(Outcome& o, const IdentityCase& c) {
    const VerificationReport r = verify(c);
    std::string what = to_string(c.id) + " " + describe(c) + ": " + to_string(r.status);
    if (r.mismatch) what += " at " + r.mismatch->location;
    if (r.status == ReportStatus::Error) what += " (" + r.message + ")";
    o.expect(r.status == ReportStatus::Pass, what);
}

IdentityCase make(IdentityId id, Strategy s = Strategy::TruncatedSeries) {
    IdentityCase c;
    c.id = id;
    c.strategy = s;
    return c;
}

Outcome subgroup_oracle() {
    Outcome o;
    for (long p : {2L, 3L}) {
        for (const auto& l : up_to(4)) {
            const auto found = enumerate_subgroups(PGroup(p, l));
            std::size_t types = 0;
            for (const auto& mu : subpartitions(l)) {
                const mpq_class formula = c_coeff(l, mu).evaluate(mpq_class(p));
                const auto it = found.find(mu);
                const mpz_class brute = it == found.end() ? mpz_class(0) : it->second;
                types += it == found.end() ? 0 : 1;
                o.expect(count_subgroups_of_type(PGroup(p, l), mu) == brute,
                         "count_subgroups_of_type disagrees with the lattice enumeration for " + show(mu));
                o.expect(brute == formula, "p=" + std::to_string(p) + " lambda=" + show(l) + " mu=" + show(mu) +
                                               ": " + brute.get_str() + " vs " + formula.get_str());
            }
            o.expect(types == found.size(), "subgroup of a type not contained in " + show(l));
        }
    }
    return o;
}

Outcome injection_oracle() {
    Outcome o;
    for (long p : {2L, 3L}) {
        for (const auto& l : up_to(3)) {
            for (const auto& m : up_to(4)) {
                const PGroup h(p, m);
                const int ell = std::max({1, l.largest(), m.largest()});
                const mpq_class formula = eval_on_group(specialize_parameter(rlambda_poly(l, ell), p), h);
                const mpz_class naive = count_injective_homs_naive(l, h);
                const std::string tag = "p=" + std::to_string(p) + " " + show(l) + " -> " + show(m);
                o.expect(naive == formula, tag + ": " + naive.get_str() + " vs " + formula.get_str());
                o.expect(count_injective_homs(l, h) == naive, tag + ": search and naive counts differ");
            }
        }
    }
    return o;
}

Outcome inversion_round_trip() {
    Outcome o;
    const int ell = 3;
    const auto names = RatPoly::in_x(ell).names();
    for (const auto& l : up_to(6, 3)) {
        RatPoly sum(names);
        for (const auto& mu : subpartitions(l)) {
            sum += to_mpoly(rlambda_expand(mu), ell).scaled(c_coeff(l, mu).renamed('t'));
        }
        o.expect(sum == RatPoly::term(names, monomial_exponent(l, ell), UniRat(1)), "lambda=" + show(l));
    }
    return o;
}

Outcome mirror_and_coherence() {
    Outcome o;
    for (const auto& l : up_to(8)) {
        const auto m = mirror_poly(l);
        bool pal = m.coeffs.size() == static_cast<std::size_t>(l.size() + 1);
        for (std::size_t k = 0; pal && k < m.coeffs.size(); ++k) pal = m.coeffs[k] == m.coeffs[m.coeffs.size() - 1 - k];
        o.expect(pal && m.palindromic, "mirror polynomial of " + show(l) + " is not palindromic");
    }
    for (long p : {2L, 3L, 5L}) {
        for (const auto& l : up_to(5)) {
            const mpq_class m0 = moment(MomentQuery{l, p, 0, Flavor::TypeS});
            const mpq_class m1 = moment(MomentQuery{l, p, 1, Flavor::TypeS});
            mpz_class scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(l.size()));
            o.expect(m0 == m1 * scale, "coherence fails for " + show(l) + " at p=" + std::to_string(p));
            o.expect(coherence_check(l, p).pass, "coherence_check disagrees for " + show(l));
        }
    }
    return o;
}

Outcome davenport_heilbronn() {
    Outcome o;
    const mpq_class m0 = moment(MomentQuery{parse_partition("1"), 3, 0, Flavor::Abelian});
    const mpq_class m1 = moment(MomentQuery{parse_partition("1"), 3, 1, Flavor::Abelian});
    o.expect(m0 == 2, "M_0 = " + m0.get_str());
    o.expect(m1 == mpq_class(4, 3), "M_1 = " + m1.get_str());
    return o;
}

Outcome type_s_first_moments() {
    Outcome o;
    for (long p : {2L, 3L, 5L}) {
        const mpq_class m0 = moment(MomentQuery{parse_partition("1"), p, 0, Flavor::TypeS});
        const mpq_class m1 = moment(MomentQuery{parse_partition("1"), p, 1, Flavor::TypeS});
        o.expect(m0 == 1 + p, "M_0^S = " + m0.get_str() + " at p=" + std::to_string(p));
        o.expect(m1 == 1 + mpq_class(1, p), "M_1^S = " + m1.get_str() + " at p=" + std::to_string(p));
    }
    return o;
}

Outcome poonen_rains() {
    Outcome o;
    for (long p : {2L, 3L, 5L}) {
        for (int m = 0; m <= 6; ++m) {
            mpz_class sum = 0, pk = 1, prod = 1, pj = 1;
            for (int k = 0; k <= m; ++k) {
                sum += qbinomial_at(m, k, mpz_class(p * p)) * pk;
                pk *= p;
            }
            for (int j = 1; j <= m; ++j) {
                pj *= p;
                prod *= 1 + pj;
            }
            const std::string tag = "p=" + std::to_string(p) + " m=" + std::to_string(m);
            o.expect(sum == prod, tag + ": " + sum.get_str() + " vs " + prod.get_str());
            o.expect(conjecture_table(ConjectureKind::Selmer, Partition(), p, 0, 1, m).value == prod,
                     tag + ": Selmer table disagrees");
        }
    }
    return o;
}

Outcome generating_functions() {
    Outcome o;
    for (const auto& l : up_to(4)) {
        for (long p : {2L, 3L}) {
            auto c = make(IdentityId::GENFUN);
            c.params.lambda = l;
            c.params.p = p;
            c.params.zmax = 6;
            expect_identity(o, c);
        }
        auto c = make(IdentityId::COMBINAT);
        c.params.lambda = l;
        c.params.zmax = 6;
        expect_identity(o, c);
    }
    return o;
}

Outcome moment_identities() {
    Outcome o;
    for (int ell = 1; ell <= 3; ++ell) {
        for (const auto& l : up_to(4, ell)) {
            for (IdentityId id : {IdentityId::UMOY_ABELIAN, IdentityId::UMOY_TYPE_S}) {
                auto c = make(id);
                c.params.ell = ell;
                c.params.lambda = l;
                c.params.zmax = 8;
                expect_identity(o, c);
            }
        }
        auto d = make(IdentityId::DELAUNAY);
        d.params.ell = ell;
        d.params.zmax = 8;
        expect_identity(o, d);
        // The row case: sum_nu C_{(ell),nu}(1/q) z^{|nu|} is 1 + z + ... + z^ell.
        const Partition row(std::vector<int>{ell});
        std::vector<UniRat> coeff(ell + 1);
        for (const auto& nu : subpartitions(row)) coeff[nu.size()] += c_coeff(row, nu).substitute_power(-1);
        for (int k = 0; k <= ell; ++k) o.expect(coeff[k] == UniRat(1), "row case coefficient of z^" + std::to_string(k));
    }
    return o;
}

Outcome finite_forms() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            auto c = make(IdentityId::FINITE_QBINHL, Strategy::SymbolicExact);
            c.params.n = n;
            c.params.k = k;
            expect_identity(o, c);
        }
    }
    for (int k = 1; k <= 3; ++k) {
        auto c = make(IdentityId::FINITE_QBINHL, Strategy::RandomPoint);
        c.params.n = 4;
        c.params.k = k;
        c.params.samples = 20;
        c.seed = 20240917 + static_cast<std::uint64_t>(k);
        expect_identity(o, c);
    }
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 3; ++k) {
            auto c = make(IdentityId::CSQ, Strategy::SymbolicExact);
            c.params.n = n;
            c.params.k = k;
            expect_identity(o, c);
        }
    }
    return o;
}

Outcome hall_littlewood_identities() {
    Outcome o;
    for (IdentityId id : {IdentityId::QBINHL, IdentityId::WARNAAR_A2, IdentityId::LASCOUX}) {
        auto c = make(id);
        c.params.alphabet = 3;
        c.params.degree = 5;
        expect_identity(o, c);
    }
    auto c = make(IdentityId::LASCOUX);
    c.params.alphabet = 3;
    c.params.degree = 5;
    c.params.specialize_y = true;
    expect_identity(o, c);
    return o;
}

Outcome qbinomial_and_euler() {
    Outcome o;
    for (int n = 0; n <= 8; ++n) {
        auto c = make(IdentityId::QBIN, Strategy::SymbolicExact);
        c.params.n = n;
        expect_identity(o, c);
    }
    auto e = make(IdentityId::EULER);
    e.params.zmax = 10;
    expect_identity(o, e);
    return o;
}

Outcome automorphisms() {
    Outcome o;
    for (long p : {2L, 3L}) {
        for (const auto& l : up_to(4)) {
            const PGroup h(p, l);
            const mpz_class a = aut_order(l, p);
            const mpz_class inj = count_injective_homs(l, h);
            o.expect(a == inj, "p=" + std::to_string(p) + " " + show(l) + ": " + a.get_str() + " vs " + inj.get_str());
        }
    }
    o.expect(aut_order(parse_partition("1,1"), 2) == 6, "|Aut(H_(1,1))| at p=2");
    o.expect(count_injective_homs_naive(parse_partition("1,1"), PGroup(2, parse_partition("1,1"))) == 6,
             "naive automorphism count of H_(1,1) at p=2");
    return o;
}

Outcome rank_law_normalization_check() {
    Outcome o;
    for (long p : {2L, 3L}) {
        for (long u : {0L, 1L}) {
            for (Flavor f : {Flavor::Abelian, Flavor::TypeS}) {
                for (int ell = 1; ell <= 3; ++ell) {
                    const auto r = rank_law_normalization(p, u, ell, 6, f);
                    const BigFloat gap = abs(r.total - 1) + r.certified_error;
                    std::ostringstream tag;
                    tag << "p=" << p << " u=" << u << " ell=" << ell << (f == Flavor::TypeS ? " type S" : "")
                        << ": total " << r.total.str(20);
                    o.expect(gap < BigFloat("1e-6"), tag.str());
                }
            }
        }
    }
    return o;
}

Outcome mutation_guard() {
    Outcome o;
    std::vector<bool> seen(all_identity_ids().size(), false);
    for (IdentityCase c : default_suite()) {
        const auto idx = static_cast<std::size_t>(c.id);
        if (seen[idx]) continue;
        seen[idx] = true;
        c.mutate = true;
        c.seed += 7;
        const auto r = verify(c);
        const bool localized = r.status == ReportStatus::Fail && r.mismatch && r.mutated_location &&
                               r.mismatch->location == *r.mutated_location;
        o.expect(localized, to_string(c.id) + " mutation was not caught at the corrupted coefficient");
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"subgroup oracle equals C_{lambda,mu}(p)", subgroup_oracle},
        {"injection oracle equals R_lambda(H_mu; p)", injection_oracle},
        {"inversion round-trip", inversion_round_trip},
        {"mirror symmetry and type S coherence", mirror_and_coherence},
        {"Davenport-Heilbronn values", davenport_heilbronn},
        {"type S first moments", type_s_first_moments},
        {"Poonen-Rains product", poonen_rains},
        {"generating functions through z^6", generating_functions},
        {"u-average identities through z^8", moment_identities},
        {"finite Hall-Littlewood q-binomial forms", finite_forms},
        {"truncated Hall-Littlewood identities", hall_littlewood_identities},
        {"q-binomial theorem and Euler identity", qbinomial_and_euler},
        {"automorphism orders", automorphisms},
        {"rank law normalization", rank_law_normalization_check},
        {"mutation guard", mutation_guard},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char line[256];
        std::snprintf(line, sizeof line, "%s %2zu  %-44s %5d checks  %7.2fs", o.pass ? "PASS" : "FAIL", i + 1,
                      criteria[i].first.c_str(), o.checks, secs);
        std::cout << line << '\n';
        if (!o.pass) {
            std::cout << "        " << o.detail << '\n';
            ++failures;
        }
        std::cout.flush();
    }
    return failures == 0 ? 0 : 1;
}
