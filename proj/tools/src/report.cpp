#include "semitrans/tools/report.hpp"

#include <cmath>

#include "semitrans/model_spec.hpp"

namespace semitrans::tools {

json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

json to_json(Vec2 v) { return json::array({number(v.x), number(v.y)}); }

json to_json(const LinearMap2& T) { return json::array({json::array({T.m11, T.m12}), json::array({T.m21, T.m22})}); }

json to_json(const SpherePoint& p) {
    return {{"theta", p.theta},
            {"point", to_json(p.point)},
            {"support", to_json(p.support)},
            {"tangent", to_json(p.tangent)},
            {"curvature", number(p.curvature)},
            {"curvature_lo", number(p.curvature_lo)},
            {"smooth", p.smooth}};
}

json to_json(const Disc& d) { return {{"center", to_json(d.center)}, {"radius", number(d.radius)}}; }

json to_json(const Ellipse& e) {
    const auto ax = e.semi_axes();
    return {{"A", e.A()}, {"B", e.B()}, {"C", e.C()}, {"semi_axes", json::array({ax[0], ax[1]})}};
}

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? to_json(*v) : json(nullptr);
}

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

}  // namespace

json to_json(const TangencyReport& r) {
    return {{"point", to_json(r.point)},
            {"inner_disc", optional_json(r.inner_disc)},
            {"outer_disc", optional_json(r.outer_disc)},
            {"inner_ellipse", optional_json(r.inner_ellipse)},
            {"outer_ellipse", optional_json(r.outer_ellipse)}};
}

json to_json(const ContractionCertificate& c) {
    return {{"T", to_json(c.T)},
            {"op_norm", number(c.op_norm)},
            {"inv_norm", number(c.inv_norm)},
            {"is_contractive", c.is_contractive},
            {"boundary", c.boundary},
            {"witness_angle", c.witness_angle},
            {"tolerance", c.tolerance}};
}

json to_json(const ModulusCurve& c) {
    json j = {{"kind", c.kind == ModulusKind::UC ? "uc" : "strong_extremality"},
              {"eps", c.eps_grid},
              {"delta", c.values},
              {"power2_coeff", optional_number(c.power2_coeff)}};
    if (c.kind != ModulusKind::UC) j["x_theta"] = c.x_theta;
    return j;
}

json to_json(const StVerdict& v) {
    json j = {{"kind", to_string(v.kind)},
              {"points_checked", v.points_checked},
              {"min_inner_radius", number(v.min_inner_radius)},
              {"max_outer_radius", number(v.max_outer_radius)}};
    if (v.witness_theta) j["witness_theta"] = *v.witness_theta;
    if (v.missing) j["missing"] = to_string(*v.missing);
    return j;
}

json to_json(const BstVerdict& v) {
    return {{"kind", to_string(v.kind)},
            {"lambda", optional_number(v.lambda)},
            {"reason", v.reason},
            {"power2_model", optional_number(v.power2_model)},
            {"power2_dual", optional_number(v.power2_dual)},
            {"worst_theta", v.worst_theta}};
}

json to_json(const UmstVerdict& v) {
    json table = json::array();
    for (const auto& r : v.table) table.push_back({{"eps", r.eps}, {"delta", r.delta}});
    return {{"kind", to_string(v.kind)}, {"kappa_min", number(v.kappa_min)}, {"delta_table", table}, {"reason", v.reason}};
}

json to_json(const Verdict& v) {
    json flats = json::array();
    for (const auto& f : v.flat_points) flats.push_back(json::array({f.theta_lo, f.theta_hi}));
    json j = {{"st", to_json(v.st)},
              {"bst", to_json(v.bst)},
              {"umst", to_json(v.umst)},
              {"flat_points", flats},
              {"pilgrim_dense", to_string(v.pilgrim_dense)}};
    j["dual_st_agrees"] = v.dual_st_agrees ? json(*v.dual_st_agrees) : json(nullptr);
    return j;
}

json envelope(const NormModel& model, std::string_view command) {
    return {{"schema_version", kSchemaVersion},
            {"tool", "semitrans"},
            {"tool_version", kToolVersion},
            {"command", command},
            {"model", {{"label", model.label()}, {"family", to_string(model.family())}, {"spec", write_model_spec(model)}}},
            {"grid",
             {{"table_size", NormModel::kTableSize},
              {"cache_size", NormModel::kCacheSize},
              {"modulus_grid", {{"size", kModulusGridSize}, {"min", kModulusGridMin}, {"max", 2.0}}},
              {"umst_eps", kUmstEps},
              {"contraction_tolerance", kContractionTol}}}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace semitrans::tools
