#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptorsion/identity_suite.hpp"
#include "ptorsion/unirat.hpp"

namespace ptorsion::detail {

/// Both sides of an identity, keyed by exponent vectors over `axis`.
/// Axis names starting with '#' are rendered as "name=value" labels rather than powers.
/// MIRROR_SWAP uses u=0 for the vanishing check above degree |lambda|.
struct SideTable {
    std::vector<std::string> axis;
    std::map<std::vector<int>, UniRat> lhs;
    std::map<std::vector<int>, UniRat> rhs;
};

/// Parameters are assumed validated against the limits.
SideTable build_sides(const IdentityCase& c);

std::string render_key(const std::vector<std::string>& axis, const std::vector<int>& key);

} // namespace ptorsion::detail
