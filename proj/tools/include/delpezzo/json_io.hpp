#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "delpezzo/cubic_model.hpp"
#include "delpezzo/point_engine.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo::io {

using nlohmann::json;

// Rationals travel as strings ("17/4"); integers are also accepted on input.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const SurfaceParams& s);
/// Throws InputError on missing or malformed fields.
SurfaceParams surface_from_json(const json& j);
SurfaceParams load_surface(const std::filesystem::path& path);

json to_json(const FiberPoint& p);
FiberPoint fiber_point_from_json(const json& j);

json to_json(const HypothesisReport& r);
json to_json(const SmoothnessVerdict& v);
json to_json(const SmoothnessCrossCheck& c);
json to_json(const SingularityReport& r, const NormalFormCheck& check);
json to_json(const SingularFiberReport& r);
json to_json(const GenerationReport& r);
GenerationReport generation_from_json(const json& j);

/// "t,x,y,provenance" rows, header first.
std::string points_csv(const std::vector<FiberPoint>& points, const std::string& provenance);
std::string points_csv(const GenerationReport& r);

}  // namespace delpezzo::io
