#pragma once

#include "howe/cycles.hpp"
#include "howe/error.hpp"
#include "howe/oracle.hpp"
#include "howe/theta.hpp"

#include "json.hpp"

namespace howe {

using Json = nlohmann::json;

// Decoders throw Error(MalformedInput) on schema violations and leave domain validation to the caller,
// except for FormedSpace where the classification table is part of the schema.

Json to_json(const FormedSpace& s);
FormedSpace space_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json to_json(const GroupDescriptor& g);
Json to_json(const DescentResult& dr);
Json to_json(const PairFactorization& pf);
Json to_json(const ReducedPairDims& r);
Json to_json(const WhittakerDatum& w);

Json to_json(const Cycle& c);
Cycle cycle_from_json(const Json& j);

Json to_json(const RangeReport& r);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const DimensionIdentityReport& r);
Json to_json(const DescentCheck& c);

Json error_json(const Error& e);

} // namespace howe
