#pragma once

#include <gmpxx.h>

#include <json.hpp>

#include "fatpoints/jet.hpp"
#include "fatpoints/ordering.hpp"
#include "fatpoints/partition.hpp"
#include "fatpoints/reduction.hpp"
#include "fatpoints/seshadri.hpp"
#include "fatpoints/simplex.hpp"

// JSON encodings of the domain types. Objects use nlohmann's default sorted
// keys, so dumps are deterministic; rationals are {"num","den"} decimal
// strings so nothing is ever rounded.

namespace fatpoints {

using Json = nlohmann::json;

Json rational_to_json(const mpq_class& q);
mpq_class rational_from_json(const Json& j);

Json to_json(const ExponentVector& v);
ExponentVector exponent_from_json(const Json& j);

Json to_json(const PointSet& pts);
PointSet points_from_json(const Json& j);

Json to_json(const Triple& t);  // D encoded as "full" when D = D(d)
Triple triple_from_json(const Json& j);

Json to_json(const MonomialOrdering& ord);  // text form
MonomialOrdering ordering_from_json(const Json& j);

Json to_json(const OracleResult& r);
OracleResult oracle_from_json(const Json& j);

Json to_json(const ReductionStep& s);
Json to_json(const ReductionTrace& t);
Json to_json(const CertificationResult& r);
CertificationResult certification_from_json(const Json& j);

Json to_json(const PartitionPlan& p);
PartitionPlan plan_from_json(const Json& j);

Json to_json(const VerifyOutcome& v);

Json to_json(const PlanRunOutcome& o);

Json to_json(const SeshadriReport& r);
SeshadriReport seshadri_from_json(const Json& j);

/// Two-decimal truncation-free display helper: round-half-up of q * 100.
std::string approx2(const mpq_class& q);

}  // namespace fatpoints
