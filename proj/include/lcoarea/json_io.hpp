#pragma once

#include <nlohmann/json.hpp>

#include "lcoarea/covering.hpp"
#include "lcoarea/integration.hpp"

namespace lcoarea {

/// Report serialization. Field order is fixed (ordered_json) and every
/// number goes through the default shortest round-trip printer, so equal
/// inputs produce byte-identical documents.
using ordered_json = nlohmann::ordered_json;

ordered_json json_value(double v);  // inf-aware: "inf" as a string

ordered_json to_json(const AxiomReport& r);
ordered_json to_json(const FiniteSpace& space, const CausalDiamond& d);
ordered_json to_json(const FiniteSpace& space, const CoverSolution& sol);
ordered_json to_json(const FiniteSpace& space, const WeightedCover& cover);
ordered_json to_json(const MeasureEstimate& est);
ordered_json to_json(const MinkDiamond& d);
ordered_json to_json(const Enlargement& e);
ordered_json to_json(const VitaliCertificate& cert);
ordered_json to_json(const VitaliVerification& v);

/// CSV summary row in the harness schema: quantity,s,t,delta,value.
std::string csv_row(const std::string& quantity, double s, double t, double delta, double value);
extern const char* kCsvHeader;

}  // namespace lcoarea
