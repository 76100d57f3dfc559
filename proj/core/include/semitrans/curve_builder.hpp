#pragma once

#include <string>
#include <vector>

#include "semitrans/norm_model.hpp"

namespace semitrans {

/// Piecewise-constant curvature on [lo, hi]; value 1 off the listed pieces.
struct CurvatureFunction {
    struct Piece {
        double lo = 0.0;
        double hi = 0.0;
        double value = 1.0;
    };
    std::vector<Piece> pieces;  // sorted, disjoint, inside [0, hi]
    double lo = -kPi / 2.0;
    double hi = 1.0;

    double operator()(double s) const;
};

constexpr int kStaircaseDepth = 20;

/// 2^-n on [2^-n, 2^-n + 2^-n-2] for n <= n_max, 1 elsewhere.
double k_staircase(double s, int n_max = kStaircaseDepth);
CurvatureFunction staircase(int n_max = kStaircaseDepth);

struct CurveSample {
    double s = 0.0;
    Vec2 point;
    double K = 0.0;  // tangent angle
};

struct BuiltCurve {
    CurvatureFunction k;
    std::vector<CurveSample> samples;
    Vec2 endpoint;
    double end_angle = 0.0;

    /// Exact point at arc length s, continuing from the nearest sample on its left.
    Vec2 at(double s) const;
    double angle_at(double s) const;
};

/// Unit-speed curve from (0,-1) heading along e1; the unit quarter circle from (-1,0) is prepended.
BuiltCurve integrate_curve(const CurvatureFunction& k, double step = 1e-4);

struct ClosingCircles {
    double a = 0.0;  // where the end tangent meets the horizontal axis
    double alpha = 0.0;  // tangent angle at the contact point q
    Arc c;
    Arc c_prime;
    double residual = 0.0;
};

/// The two circles joining the curve end to (1, 0) with a vertical tangent there.
ClosingCircles closing_circles(const BuiltCurve& curve);

/// Curve arcs from (0,-1), then the closing circles, reflected into a symmetric sphere.
NormModel close_sphere(const BuiltCurve& curve, std::string label = "curve_norm");

/// The staircase example at full depth.
NormModel build_nobst(int n_max = kStaircaseDepth);

struct NobstWitness {
    int n = 0;
    double bound = 0.0;
};

/// Lower bounds on ||T^-1|| for maps sending a curvature 2^-n point to a curvature 1 point.
std::vector<NobstWitness> nobst_witness(const NormModel& model, const BuiltCurve& curve, const std::vector<int>& n_list);

std::string curve_csv(const BuiltCurve& curve);

}  // namespace semitrans
