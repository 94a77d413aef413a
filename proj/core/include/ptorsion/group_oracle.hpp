#pragma once

#include <gmpxx.h>

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <map>
#include <vector>

#include "ptorsion/mpoly.hpp"
#include "ptorsion/partition.hpp"

namespace ptorsion {

/// Hard bounds for the brute-force oracles. Exceeding one raises ResourceLimitError naming it.
struct ResourceLimits {
    std::uint64_t max_group_order = 4096;
    std::uint64_t max_subgroups = 200000;
    std::uint64_t max_search_nodes = 50000000;
};

class PGroup;

/// Element of a PGroup as a residue tuple (a_1, ..., a_l) with 0 <= a_i < p^{lambda_i}.
struct GElem {
    const PGroup* group = nullptr;
    std::vector<long> residues;
};

/// H_lambda = (+)_i Z/p^{lambda_i}. Elements are indexed 0..order-1 in mixed radix, first part
/// least significant.
class PGroup {
public:
    PGroup(long p, Partition lambda, ResourceLimits limits = {});

    long p() const noexcept { return p_; }
    const Partition& type() const noexcept { return lambda_; }
    std::uint64_t order() const noexcept { return order_; }
    const ResourceLimits& limits() const noexcept { return limits_; }
    int rank() const noexcept { return lambda_.length(); }

    GElem element(std::uint64_t index) const;
    std::uint64_t index_of(const GElem& g) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t negate(std::uint64_t a) const;
    /// k * a for k >= 0.
    std::uint64_t multiple(std::uint64_t a, std::uint64_t k) const;
    /// Additive order of a, a power of p.
    std::uint64_t element_order(std::uint64_t a) const;
    /// p^k * a.
    std::uint64_t p_power_multiple(std::uint64_t a, int k) const;

private:
    long p_;
    Partition lambda_;
    ResourceLimits limits_;
    std::uint64_t order_ = 1;
    std::vector<std::uint64_t> moduli_;
    std::vector<std::uint64_t> strides_;
};

using Subgroup = boost::dynamic_bitset<>;

/// |H[p^k]| by the conjugate-part formula.
mpz_class torsion_order(const PGroup& h, int k);
/// |H[p^k]| by counting elements killed by p^k.
mpz_class torsion_order_brute(const PGroup& h, int k);

/// |Aut H_lambda| from the conjugate-square formula; throws std::logic_error unless integral.
mpz_class aut_order(const Partition& lambda, long p);
/// |Aut^s(H_lambda x H_lambda)| for a group of type S.
mpz_class auts_order(const Partition& lambda, long p);

/// Smallest subgroup containing s and g.
Subgroup join(const PGroup& h, const Subgroup& s, std::uint64_t g);
/// Type of a subgroup from the logarithms of its p^k-torsion orders.
Partition subgroup_type(const PGroup& h, const Subgroup& s);

/// All subgroups by join-closure over cyclic subgroups. The count is re-derived by an
/// independent upward closure from the trivial subgroup; a disagreement throws std::logic_error.
std::map<Partition, mpz_class> enumerate_subgroups(const PGroup& h);

/// Number of subgroups of H of type mu.
mpz_class count_subgroups_of_type(const PGroup& h, const Partition& mu);

/// Injective homomorphisms H_lambda -> H by depth-first choice of generator images,
/// keeping an image only when it extends the current image as a direct summand.
mpz_class count_injective_homs(const Partition& lambda, const PGroup& h);

/// Same count by testing every tuple of generator images (tiny groups only).
mpz_class count_injective_homs_naive(const Partition& lambda, const PGroup& h);

/// T(|H[p]|, ..., |H[p^l]|). Coefficients must already be constants (t specialised);
/// otherwise ParameterMismatch.
mpq_class eval_on_group(const RatPoly& t, const PGroup& h);

/// Replaces the formal parameter in every coefficient by the integer p.
RatPoly specialize_parameter(const RatPoly& t, long p);

} // namespace ptorsion
