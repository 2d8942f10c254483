#pragma once

// JSON forms of relation sets and Laurent tails.
//
//   RelationSet: {"q":3,"a":3,"b":2,"pairs":[[f,a_i],...]}
//                optionally "parity":[true,...] aligned with "pairs".
//   LaurentTail: {"q":2,"valuation":0,"precision":20,"coefficients":[...]}
//                coefficients run from u^valuation through u^precision; for
//                s > 1 each one is its coordinate array [c0,...,c_{s-1}].

#include <json.hpp>

#include "mzv/laurent.hpp"
#include "mzv/relations.hpp"

namespace mzv {

using Json = nlohmann::ordered_json;

Json relation_to_json(const RelationSet& rel, bool with_parity = false);
/// Throws std::invalid_argument on schema violations.
RelationSet relation_from_json(const Json& j);

Json laurent_to_json(const LaurentTail& x);
/// Throws std::invalid_argument on schema violations or a field mismatch.
LaurentTail laurent_from_json(const Json& j, const FieldCtx& ctx);

}  // namespace mzv
