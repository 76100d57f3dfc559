#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "semitrans/classify.hpp"
#include "semitrans/moduli.hpp"
#include "semitrans/semigroup.hpp"
#include "semitrans/tangency.hpp"

namespace semitrans::tools {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Finite doubles as numbers; infinities and NaN as strings.
json number(double v);
json to_json(Vec2 v);
json to_json(const LinearMap2& T);
json to_json(const SpherePoint& p);
json to_json(const Disc& d);
json to_json(const Ellipse& e);
json to_json(const TangencyReport& r);
json to_json(const ContractionCertificate& c);
json to_json(const ModulusCurve& c);
json to_json(const StVerdict& v);
json to_json(const BstVerdict& v);
json to_json(const UmstVerdict& v);
json to_json(const Verdict& v);

/// Schema, versions, the model spec and the grids every command shares.
json envelope(const NormModel& model, std::string_view command);

std::string dump(const json& j);

}  // namespace semitrans::tools
