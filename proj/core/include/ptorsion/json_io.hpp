#pragma once

#include <gmpxx.h>

#include <nlohmann/json.hpp>

#include "ptorsion/identity_suite.hpp"
#include "ptorsion/int_poly.hpp"
#include "ptorsion/mpoly.hpp"
#include "ptorsion/partition.hpp"
#include "ptorsion/rlambda.hpp"
#include "ptorsion/unirat.hpp"
#include "ptorsion/zseries.hpp"

namespace ptorsion::json {

using nlohmann::json;

/// A JSON number when the value fits in int64, otherwise a decimal string.
json integer(const mpz_class& v);
/// Always a string: "a/b", or "a" for integers.
json fraction(const mpq_class& v);
mpq_class parse_fraction(const json& j);

json coefficients(const IntPoly& p);
IntPoly parse_coefficients(const json& j);

json to_json(const Partition& p);
json to_json(const UniRat& r);
json to_json(const ZSeries& s);
json to_json(const RExpansion& e);
json to_json(const RatPoly& p);
json to_json(const IdentityCase& c);
json to_json(const VerificationReport& r);

UniRat parse_unirat(const json& j);
ZSeries parse_zseries(const json& j);

} // namespace ptorsion::json
