#pragma once

// JSON encoding of results, schema "fsplit/1". Integers that can grow
// without bound (lambda, a_e) and all rationals are strings; e, q, dim and
// alpha are plain numbers.

#include "json.hpp"

#include "fsplit/probe.hpp"
#include "fsplit/splitting.hpp"

namespace fsplit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "fsplit/1";

Json to_json(const SplittingReport& r);
SplittingReport splitting_report_from_json(const Json& j);

Json to_json(const SignatureEstimate& s);
SignatureEstimate signature_from_json(const Json& j);

Json to_json(const CoordinatePrime& p);
CoordinatePrime prime_from_json(const Json& j);

Json to_json(const SemicontinuityReport& r);
SemicontinuityReport semicontinuity_from_json(const Json& j);

Json to_json(const MonotonicityReport& r);
MonotonicityReport monotonicity_from_json(const Json& j);

Json to_json(const KunzReport& r);
KunzReport kunz_from_json(const Json& j);

}  // namespace fsplit
