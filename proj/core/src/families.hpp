#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "semitrans/norm_model.hpp"

namespace semitrans::detail {

/// Gauge evaluation and local geometry of one norm family.
class GaugeFamily {
public:
    virtual ~GaugeFamily() = default;

    virtual double gauge(Vec2 v) const = 0;
    /// One-sided jets at a point of the sphere (or any nonzero point; families normalise).
    virtual LocalJet local(Vec2 x) const = 0;
    /// Closed-form exposed face, when the family has one.
    virtual std::optional<SupportFace> support_face(Vec2 /*u*/) const { return std::nullopt; }
    virtual bool c2() const = 0;
    virtual std::vector<double> feature_angles() const { return {}; }
};

double lp_gauge(Vec2 v, double p);

std::shared_ptr<const GaugeFamily> lp_family(double p);
std::shared_ptr<const GaugeFamily> polygon_family(std::vector<Vec2> vertices);
std::shared_ptr<const GaugeFamily> polar_family(std::vector<Harmonic> harmonics);
std::shared_ptr<const GaugeFamily> quadrant_mix_family(double p, double q);
std::shared_ptr<const GaugeFamily> ellipse_intersection_family(Sym2 first, Sym2 second);
std::shared_ptr<const GaugeFamily> arc_chain_family(std::vector<Arc> arcs);
std::shared_ptr<const GaugeFamily> blend_family(std::shared_ptr<const NormModel> base, double eps, double scale);
std::shared_ptr<const GaugeFamily> dual_family(std::shared_ptr<const NormModel> base);

/// g, g', g'' of a harmonic series at theta.
struct PolarJet {
    double g = 0.0;
    double gp = 0.0;
    double gpp = 0.0;
};
PolarJet eval_harmonics(const std::vector<Harmonic>& harmonics, double theta);

}  // namespace semitrans::detail
