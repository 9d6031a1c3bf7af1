#pragma once

#include <string>

#include "unclab/claims.hpp"
#include "unclab/circlepoly.hpp"
#include "unclab/sets.hpp"
#include "unclab/vendor_json.hpp"

namespace unclab {

class Spectrum;
class CosineSeries;
class TrigConfig;

// JSON encodings are the wire format of the lab: {"parts": [[a,b],...]},
// {"arcs": [[α,β],...]}, {"re": [...], "im": [...]},
// {"W":..., "nodes": [...], "weights": [...], "re": [...], "im": [...]},
// {"A": [...], "B": [...]}, {"a": [...]}. nlohmann/json already serializes
// doubles as shortest round-trip decimals with a fixed (sorted) key order,
// which is what the byte-determinism contract needs.

nlohmann::json to_json(const IntervalUnion& u);
IntervalUnion interval_union_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ArcUnion& u);
ArcUnion arc_union_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TrigConfig& c);
TrigConfig trig_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CosineSeries& c);
CosineSeries cosine_series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClaimReport& r);
ClaimReport claim_report_from_json(const nlohmann::json& j);

// Shortest round-trip decimal for CSV cells (std::to_chars).
std::string format_double(double x);

}  // namespace unclab
