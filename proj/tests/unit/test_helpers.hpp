#pragma once

#include <string>
#include <vector>

#include "ptorsion/partition.hpp"
#include "ptorsion/unirat.hpp"

namespace testing {

inline ptorsion::Partition P(const std::string& s) { return ptorsion::parse_partition(s); }

/// Polynomial in q from ascending integer coefficients.
inline ptorsion::UniRat poly(std::vector<long> cs, char var = 'q') {
    std::vector<mpz_class> v(cs.begin(), cs.end());
    return ptorsion::UniRat(ptorsion::IntPoly(std::move(v)), var);
}

} // namespace testing
