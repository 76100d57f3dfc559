#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semitrans/linalg.hpp"

namespace semitrans {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Family {
    Lp,
    Polar,
    QuadrantMix,
    Polygon,
    ArcChain,
    EllipseIntersection,
    Blend,
    CurveNorm,
    Dual,
};

std::string_view to_string(Family f);

/// Term of the radial function g(theta) = sum cos_amp*cos(n theta) + sin_amp*sin(n theta).
struct Harmonic {
    int n = 0;
    double cos_amp = 0.0;
    double sin_amp = 0.0;
};

/// Circular arc traversed from start_angle to end_angle around its own center.
struct Arc {
    Vec2 center;
    double radius = 1.0;
    double start_angle = 0.0;
    double end_angle = 0.0;
    int orientation = 1;

    Vec2 point_at(double angle) const { return center + unit(angle) * radius; }
    Vec2 start_point() const { return point_at(start_angle); }
    Vec2 end_point() const { return point_at(end_angle); }
    /// Direction of travel at the given angle.
    Vec2 tangent_at(double angle) const { return rot90(unit(angle)) * static_cast<double>(orientation); }
};

/// A point of the unit sphere with its first- and second-order data.
struct SpherePoint {
    double theta = 0.0;
    Vec2 point;
    /// Support functional J(x) through the dot-product pairing; averaged at corners.
    Vec2 support;
    /// a^perp: unit (in the model norm) tangent, counterclockwise.
    Vec2 tangent;
    /// Largest one-sided curvature; +infinity at corners and cusps of curvature.
    double curvature = 0.0;
    /// Smallest one-sided curvature.
    double curvature_lo = 0.0;
    bool smooth = true;

    bool infinite_curvature() const { return curvature == kInfinity; }
};

namespace detail {

/// One-sided first/second order data of the gauge at a sphere point.
struct LocalJet {
    Vec2 grad_lo;
    Vec2 grad_hi;
    double kappa_lo = 0.0;
    double kappa_hi = 0.0;
};

/// Endpoints of the face of the ball exposed by a direction; equal for exposed points.
struct SupportFace {
    Vec2 lo;
    Vec2 hi;
};

class GaugeFamily;

}  // namespace detail

class NormModel;

struct LpParams {
    double p = 2.0;  // +infinity for the max norm
};
struct PolarParams {
    std::vector<Harmonic> harmonics;
};
struct QuadrantMixParams {
    double p = 2.0;
    double q = 2.0;
};
struct PolygonParams {
    std::vector<Vec2> vertices;
};
struct ArcChainParams {
    std::vector<Arc> arcs;
};
struct EllipseIntersectionParams {
    Sym2 first;
    Sym2 second;
};
struct BlendParams {
    std::shared_ptr<const NormModel> base;
    double eps = 0.0;
    double scale = 1.0;
};
struct CurveNormParams {
    /// Arcs of the fourth-quadrant curve, from (0,-b) to (a,0).
    std::vector<Arc> quadrant_arcs;
};
struct DualParams {
    std::shared_ptr<const NormModel> base;
};

using ModelParams = std::variant<LpParams, PolarParams, QuadrantMixParams, PolygonParams, ArcChainParams,
                                 EllipseIntersectionParams, BlendParams, CurveNormParams, DualParams>;

/// Immutable, validated norm on the plane. Cheap to copy.
class NormModel {
public:
    static constexpr std::size_t kTableSize = 1024;
    static constexpr std::size_t kCacheSize = 4096;
    static constexpr double kSmoothTol = 1e-6;
    static constexpr double kInfiniteCurvature = 1e8;

    NormModel(std::shared_ptr<const detail::GaugeFamily> impl, ModelParams params, std::string label);

    Family family() const { return family_; }
    const std::string& label() const { return label_; }
    const ModelParams& params() const { return params_; }

    double gauge(Vec2 v) const;
    /// Point of the sphere on the ray of polar angle theta.
    Vec2 radial_point(double theta) const;
    SpherePoint sphere_point(double theta) const;
    SpherePoint sphere_point_at(Vec2 x) const { return sphere_point(angle_of(x)); }
    detail::LocalJet local(Vec2 x) const;
    /// Face of the unit ball maximizing <u, .>.
    detail::SupportFace support_face(Vec2 u) const;
    /// sup{<f, y> : gauge(y) <= 1}.
    double support_value(Vec2 f) const;

    bool is_c2() const;
    bool is_euclidean() const { return euclidean_; }
    bool is_polyhedral() const { return polyhedral_; }

    /// Polar angles where curvature may jump (junctions, vertices) plus arc midpoints.
    std::vector<double> feature_angles() const;

    /// Sphere points at polar angles 2 pi i / kCacheSize.
    std::span<const Vec2> cache() const { return cache_->points; }
    static double cache_angle(std::size_t i) { return kTwoPi * static_cast<double>(i) / kCacheSize; }
    /// SpherePoints at polar angles 2 pi i / kTableSize.
    std::span<const SpherePoint> table() const { return cache_->table; }

    const detail::GaugeFamily& impl() const { return *impl_; }

    /// Form of the minimal-area enclosing ellipse, computed on first use.
    const Sym2& john_form() const;
    /// One-sided support functionals at the cache points: a sampling of the dual sphere.
    std::span<const Vec2> dual_sphere() const;
    /// Modulus of convexity on the standard eps grid (see moduli.hpp), computed on first use.
    std::span<const double> delta_table() const;

private:
    struct Cache {
        std::vector<Vec2> points;
        std::vector<SpherePoint> table;
        mutable std::once_flag john_once;
        mutable Sym2 john;
        mutable std::once_flag local_once;
        mutable std::vector<Vec2> dual_points;
        // Unwrapped polar angles of the one-sided normals at the cache points (nondecreasing).
        mutable std::vector<double> normal_lo, normal_hi;
        mutable std::once_flag delta_once;
        mutable std::vector<double> delta_values;
    };

    std::shared_ptr<const detail::GaugeFamily> impl_;
    std::shared_ptr<const Cache> cache_;
    ModelParams params_;
    std::string label_;
    Family family_;
    bool euclidean_ = false;
    bool polyhedral_ = false;

    void validate() const;
    void build_local_table() const;
};

// Constructors. All throw semitrans::Error on invalid input.

/// p in [1, inf]; pass kInfinity for the max norm.
NormModel make_lp(double p);
NormModel make_euclidean();
NormModel make_polar(std::vector<Harmonic> harmonics);
/// g(theta) = 1 + amplitude * sin(4 theta).
NormModel make_grandpa_pig(double amplitude = 1.0 / 17.0);
NormModel make_quadrant_mix(double p, double q);
/// Euclidean where x1 x2 >= 0, l1 where x1 x2 <= 0.
NormModel make_l2_l1_hybrid();
/// Counterclockwise, origin-symmetric vertex list.
NormModel make_polygon(std::vector<Vec2> vertices);
NormModel make_arc_chain(std::vector<Arc> arcs);
NormModel make_ellipse_intersection(Sym2 first, Sym2 second);
/// gauge = scale * sqrt(base^2 + eps * |.|_2^2).
NormModel make_blend(const NormModel& base, double eps, double scale = 1.0);
/// Fourfold reflection of a fourth-quadrant curve: ||(x,y)|| = 1 iff (|x|, -|y|) lies on it.
NormModel make_curve_norm(std::vector<Arc> quadrant_arcs, std::string label = "curve_norm");
/// The spliced-circles construction: circle of radius R centred at (0, R-1), switched at angle b_angle.
NormModel make_splicing(double R = 2.0, double b_angle = -kPi / 4.0);
/// Norm of the dual plane, sampled from the support function of the model.
NormModel make_dual(const NormModel& model);

/// Fourfold reflection of a fourth-quadrant arc list into a closed counterclockwise chain.
std::vector<Arc> reflect_quadrant_arcs(const std::vector<Arc>& quadrant_arcs);

}  // namespace semitrans
