#pragma once

#include "twopar/certify.hpp"
#include "twopar/configuration.hpp"
#include "twopar/curves.hpp"
#include "twopar/group.hpp"
#include "twopar/regions.hpp"

#include <json.hpp>

#include <string>

namespace twopar {

inline constexpr int kSchemaVersion = 1;

nlohmann::ordered_json to_json(const ComplexValue& v);
nlohmann::ordered_json to_json(const RegionReport& r);
nlohmann::ordered_json to_json(const Certificate& c);
nlohmann::ordered_json to_json(const CatalogEntry& e);
nlohmann::ordered_json to_json(const PlaneCurve& c, bool include_samples = true);
nlohmann::ordered_json to_json(const CurveSet& cs, bool include_samples = true);
nlohmann::ordered_json to_json(const SchottkyConfiguration& cfg, const VerifyReport& rep);
nlohmann::ordered_json to_json(const TraceIdentityReport& r);

std::string curves_to_csv(const CurveSet& cs);

// Deterministic SVG: fixed viewport, fixed layer order and styling, no
// timestamps.  Layer names follow the region names.
std::string curves_to_svg(const std::vector<std::pair<std::string, CurveSet>>& layers,
                          double view = 6.0, int pixels = 800);

std::string configuration_to_svg(const SchottkyConfiguration& cfg, double view = 6.0,
                                 int pixels = 800);

} // namespace twopar
