#pragma once

#include <string>

#include <json.hpp>

#include "cosdyn/criteria.hpp"
#include "cosdyn/witness.hpp"

namespace cosdyn {

/// Schema tag embedded in every JSON document this library emits.
inline constexpr const char* kReportSchema = "cosdyn-report/1";

using Json = nlohmann::ordered_json;

Json to_json(const GroupElement& g);
Json to_json(const FiniteSet& s);
Json to_json(const FinSeq& f);
Json to_json(const CriterionReport& report);
Json to_json(const DirectSumReport& report);
Json to_json(const WitnessTrace& trace);

/// CSV rows: n,Q_phi,Q_tilde,Q2_plus,Q2_minus,partition_size_plus.
std::string to_csv(const CriterionReport& report);
/// CSV rows: n, distances, the five bound terms, their total, and the
/// tightness ratio (empty when the distance is zero).
std::string to_csv(const WitnessTrace& trace);

/// Shortest round-trip decimal rendering, shared by the CSV writers.
std::string format_double(double v);

}  // namespace cosdyn
