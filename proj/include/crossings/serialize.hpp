#pragma once

#include "crossings/census.hpp"
#include "crossings/embedding.hpp"
#include "crossings/moments.hpp"
#include "crossings/stats.hpp"

#include <json.hpp>

namespace crossings {

/// {"num": "...", "den": "...", "decimal": ...}: exact value plus a
/// convenience double.
nlohmann::json rational_json(const Rational& r);

/// Census counts are rendered as decimal strings so consumers never overflow.
nlohmann::json census_json(const SubgraphCensus& c);

/// JSON list of {k, numerator, denominator}.
nlohmann::json pmf_json(const Pmf& pmf);

nlohmann::json moment_report_json(const MomentReport& r);

nlohmann::json empirical_report_json(const EmpiricalReport& r);

nlohmann::json family_reference_json(const FamilyReference& ref);

}  // namespace crossings
