#include "ptorsion/group_oracle.hpp"

#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "ptorsion/errors.hpp"

namespace ptorsion {

PGroup::PGroup(long p, Partition lambda, ResourceLimits limits)
    : p_(p), lambda_(std::move(lambda)), limits_(limits) {
    if (p < 2) throw std::invalid_argument("PGroup needs a prime p >= 2");
    for (int part : lambda_.parts()) {
        std::uint64_t m = 1;
        for (int i = 0; i < part; ++i) {
            m *= static_cast<std::uint64_t>(p);
            if (m > limits_.max_group_order) break;
        }
        strides_.push_back(order_);
        moduli_.push_back(m);
        if (order_ > limits_.max_group_order / m) {
            throw ResourceLimitError("max_group_order", "group of type (" + to_string(lambda_) + ") at p=" +
                                                            std::to_string(p) + " exceeds order " +
                                                            std::to_string(limits_.max_group_order));
        }
        order_ *= m;
    }
}

GElem PGroup::element(std::uint64_t index) const {
    GElem g{this, std::vector<long>(moduli_.size())};
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        g.residues[i] = static_cast<long>((index / strides_[i]) % moduli_[i]);
    }
    return g;
}

std::uint64_t PGroup::index_of(const GElem& g) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const long m = static_cast<long>(moduli_[i]);
        idx += static_cast<std::uint64_t>(((g.residues.at(i) % m) + m) % m) * strides_[i];
    }
    return idx;
}

std::uint64_t PGroup::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::uint64_t ra = (a / strides_[i]) % moduli_[i];
        const std::uint64_t rb = (b / strides_[i]) % moduli_[i];
        idx += ((ra + rb) % moduli_[i]) * strides_[i];
    }
    return idx;
}

std::uint64_t PGroup::negate(std::uint64_t a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::uint64_t ra = (a / strides_[i]) % moduli_[i];
        idx += ((moduli_[i] - ra) % moduli_[i]) * strides_[i];
    }
    return idx;
}

std::uint64_t PGroup::multiple(std::uint64_t a, std::uint64_t k) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        const std::uint64_t ra = (a / strides_[i]) % moduli_[i];
        idx += ((ra * (k % moduli_[i])) % moduli_[i]) * strides_[i];
    }
    return idx;
}

std::uint64_t PGroup::p_power_multiple(std::uint64_t a, int k) const {
    if (k >= lambda_.largest()) return 0;
    std::uint64_t m = 1;
    for (int i = 0; i < k; ++i) m *= static_cast<std::uint64_t>(p_);
    return multiple(a, m);
}

std::uint64_t PGroup::element_order(std::uint64_t a) const {
    std::uint64_t ord = 1;
    while (a != 0) {
        a = multiple(a, static_cast<std::uint64_t>(p_));
        ord *= static_cast<std::uint64_t>(p_);
    }
    return ord;
}

mpz_class torsion_order(const PGroup& h, int k) {
    if (k < 0) throw std::invalid_argument("torsion_order needs k >= 0");
    long e = 0;
    for (int i = 1; i <= k; ++i) e += h.type().conj_part(i);
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(h.p()), static_cast<unsigned long>(e));
    return r;
}

mpz_class torsion_order_brute(const PGroup& h, int k) {
    if (k < 0) throw std::invalid_argument("torsion_order needs k >= 0");
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < h.order(); ++a) {
        if (h.p_power_multiple(a, k) == 0) ++count;
    }
    return mpz_class(static_cast<unsigned long>(count));
}

namespace {

// (1/p^s; 1/p^s)_m as an exact rational.
mpq_class inverse_pochhammer(long p, int s, int m) {
    mpq_class r = 1;
    mpz_class ps;
    mpz_ui_pow_ui(ps.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(s));
    mpz_class pw = 1;
    for (int j = 1; j <= m; ++j) {
        pw *= ps;
        r *= mpq_class(pw - 1, pw);
    }
    r.canonicalize();
    return r;
}

mpz_class integral(const mpq_class& v, const char* what) {
    if (v.get_den() != 1) throw std::logic_error(std::string(what) + " is not an integer");
    return v.get_num();
}

mpz_class ipow(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

} // namespace

mpz_class aut_order(const Partition& lambda, long p) {
    long e = 0;
    for (int i = 1; i <= lambda.largest(); ++i) e += static_cast<long>(lambda.conj_part(i)) * lambda.conj_part(i);
    mpq_class v(ipow(p, e));
    for (int j = 1; j <= lambda.largest(); ++j) v *= inverse_pochhammer(p, 1, lambda.multiplicity(j));
    return integral(v, "|Aut H_lambda|");
}

mpz_class auts_order(const Partition& lambda, long p) {
    long e = lambda.size();
    for (int i = 1; i <= lambda.largest(); ++i) e += 2L * lambda.conj_part(i) * lambda.conj_part(i);
    mpq_class v(ipow(p, e));
    for (int j = 1; j <= lambda.largest(); ++j) v *= inverse_pochhammer(p, 2, lambda.multiplicity(j));
    return integral(v, "|Aut^s G_lambda|");
}

Subgroup join(const PGroup& h, const Subgroup& s, std::uint64_t g) {
    if (s.test(g)) return s;
    Subgroup out = s;
    std::vector<std::uint64_t> members;
    for (auto i = s.find_first(); i != Subgroup::npos; i = s.find_next(i)) members.push_back(i);
    // <S, g> is the union of cosets S + k g until k g falls back into S.
    std::uint64_t kg = g;
    while (!s.test(kg)) {
        for (std::uint64_t m : members) out.set(h.add(m, kg));
        kg = h.add(kg, g);
    }
    return out;
}

Partition subgroup_type(const PGroup& h, const Subgroup& s) {
    std::vector<int> conj;
    long prev_log = 0;
    for (int k = 1;; ++k) {
        std::uint64_t count = 0;
        for (auto i = s.find_first(); i != Subgroup::npos; i = s.find_next(i)) {
            if (h.p_power_multiple(i, k) == 0) ++count;
        }
        long lg = 0;
        for (std::uint64_t c = count; c > 1; c /= static_cast<std::uint64_t>(h.p())) ++lg;
        if (lg == prev_log) break;
        conj.push_back(static_cast<int>(lg - prev_log));
        prev_log = lg;
    }
    return Partition::from_conjugate(conj);
}

namespace {

Subgroup trivial_subgroup(const PGroup& h) {
    Subgroup s(h.order());
    s.set(0);
    return s;
}

void check_subgroup_budget(const PGroup& h, std::size_t n) {
    if (n > h.limits().max_subgroups) {
        throw ResourceLimitError("max_subgroups", "more than " + std::to_string(h.limits().max_subgroups) +
                                                      " subgroups in group of type (" + to_string(h.type()) + ")");
    }
}

std::set<Subgroup> closure_over_cyclics(const PGroup& h) {
    std::set<Subgroup> cyclic;
    std::vector<std::uint64_t> generators;
    const Subgroup triv = trivial_subgroup(h);
    for (std::uint64_t g = 0; g < h.order(); ++g) {
        if (cyclic.insert(join(h, triv, g)).second) generators.push_back(g);
    }
    std::set<Subgroup> all(cyclic.begin(), cyclic.end());
    std::deque<Subgroup> frontier(cyclic.begin(), cyclic.end());
    while (!frontier.empty()) {
        Subgroup s = std::move(frontier.front());
        frontier.pop_front();
        for (std::uint64_t g : generators) {
            Subgroup t = join(h, s, g);
            if (all.insert(t).second) {
                check_subgroup_budget(h, all.size());
                frontier.push_back(std::move(t));
            }
        }
    }
    return all;
}

struct BitsetHash {
    std::size_t operator()(const Subgroup& s) const {
        std::size_t hsh = 1469598103934665603ULL;
        for (auto i = s.find_first(); i != Subgroup::npos; i = s.find_next(i)) {
            hsh = (hsh ^ i) * 1099511628211ULL;
        }
        return hsh;
    }
};

std::size_t upward_recount(const PGroup& h) {
    std::unordered_set<Subgroup, BitsetHash> seen;
    std::vector<Subgroup> layer{trivial_subgroup(h)};
    seen.insert(layer.front());
    while (!layer.empty()) {
        std::vector<Subgroup> next;
        for (const Subgroup& s : layer) {
            for (std::uint64_t g = 0; g < h.order(); ++g) {
                if (s.test(g)) continue;
                Subgroup t = join(h, s, g);
                if (seen.insert(t).second) {
                    check_subgroup_budget(h, seen.size());
                    next.push_back(std::move(t));
                }
            }
        }
        layer = std::move(next);
    }
    return seen.size();
}

} // namespace

std::map<Partition, mpz_class> enumerate_subgroups(const PGroup& h) {
    const std::set<Subgroup> all = closure_over_cyclics(h);
    const std::size_t recount = upward_recount(h);
    if (recount != all.size()) {
        throw std::logic_error("subgroup enumeration and recount disagree: " + std::to_string(all.size()) +
                               " vs " + std::to_string(recount));
    }
    std::map<Partition, mpz_class> out;
    for (const Subgroup& s : all) out[subgroup_type(h, s)] += 1;
    return out;
}

mpz_class count_subgroups_of_type(const PGroup& h, const Partition& mu) {
    if (!contains(h.type(), mu)) return 0;
    const auto table = enumerate_subgroups(h);
    auto it = table.find(mu);
    return it == table.end() ? mpz_class(0) : it->second;
}

namespace {

// Elements f with p^t f = 0 and p^{t-1} f != 0, bucketed by t.
std::vector<std::vector<std::uint64_t>> elements_by_exact_order(const PGroup& h, int max_t) {
    std::vector<std::vector<std::uint64_t>> out(max_t + 1);
    for (std::uint64_t a = 1; a < h.order(); ++a) {
        std::uint64_t ord = h.element_order(a);
        int t = 0;
        while (ord > 1) {
            ord /= static_cast<std::uint64_t>(h.p());
            ++t;
        }
        if (t <= max_t) out[t].push_back(a);
    }
    return out;
}

} // namespace

mpz_class count_injective_homs(const Partition& lambda, const PGroup& h) {
    PGroup source(h.p(), lambda, h.limits());  // enforces the bound on H_lambda as well
    (void)source;
    const auto& parts = lambda.parts();
    if (parts.empty()) return 1;
    const auto by_order = elements_by_exact_order(h, lambda.largest());
    std::uint64_t nodes = 0;
    mpz_class total = 0;
    std::function<void(std::size_t, const Subgroup&)> dfs = [&](std::size_t i, const Subgroup& image) {
        const int t = parts[i];
        const bool last = (i + 1 == parts.size());
        for (std::uint64_t f : by_order[t]) {
            if (++nodes > h.limits().max_search_nodes) {
                throw ResourceLimitError("max_search_nodes", "injection search exceeded " +
                                                                 std::to_string(h.limits().max_search_nodes) +
                                                                 " candidate images");
            }
            // <image, f> is a direct sum iff the order-p element of <f> avoids the image.
            if (image.test(h.p_power_multiple(f, t - 1))) continue;
            if (last) {
                total += 1;
            } else {
                Subgroup grown = image;
                std::uint64_t kf = f;
                std::vector<std::uint64_t> members;
                for (auto m = image.find_first(); m != Subgroup::npos; m = image.find_next(m)) members.push_back(m);
                while (kf != 0) {
                    for (std::uint64_t m : members) grown.set(h.add(m, kf));
                    kf = h.add(kf, f);
                }
                dfs(i + 1, grown);
            }
        }
    };
    dfs(0, trivial_subgroup(h));
    return total;
}

mpz_class count_injective_homs_naive(const Partition& lambda, const PGroup& h) {
    PGroup source(h.p(), lambda, h.limits());
    const auto& parts = lambda.parts();
    std::vector<std::uint64_t> choice(parts.size(), 0);
    std::vector<std::vector<std::uint64_t>> allowed(parts.size());
    long double tuples = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::uint64_t a = 0; a < h.order(); ++a) {
            if (h.p_power_multiple(a, parts[i]) == 0) allowed[i].push_back(a);
        }
        tuples *= static_cast<long double>(allowed[i].size());
    }
    if (tuples * static_cast<long double>(source.order()) > static_cast<long double>(h.limits().max_search_nodes)) {
        throw ResourceLimitError("max_search_nodes", "naive injection count too large");
    }
    mpz_class total = 0;
    std::vector<std::size_t> idx(parts.size(), 0);
    const std::uint64_t target = source.order();
    while (true) {
        Subgroup image = trivial_subgroup(h);
        for (std::size_t i = 0; i < parts.size(); ++i) image = join(h, image, allowed[i][idx[i]]);
        if (image.count() == target) total += 1;
        std::size_t k = 0;
        while (k < parts.size() && ++idx[k] == allowed[k].size()) idx[k++] = 0;
        if (k == parts.size()) break;
    }
    return total;
}

RatPoly specialize_parameter(const RatPoly& t, long p) {
    return t.map_coeffs<UniRat>([p](const UniRat& c) { return UniRat(c.evaluate(mpq_class(p))); });
}

mpq_class eval_on_group(const RatPoly& t, const PGroup& h) {
    std::vector<UniRat> values;
    for (int k = 1; k <= t.nvars(); ++k) values.emplace_back(torsion_order(h, k));
    for (const auto& [e, c] : t.terms()) {
        if (!c.is_constant()) {
            throw ParameterMismatch("eval_on_group needs the parameter specialised first, found " + c.to_string());
        }
    }
    return t.evaluate(values).constant_value();
}

} // namespace ptorsion
