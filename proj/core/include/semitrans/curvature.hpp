#pragma once

#include <string>
#include <vector>

#include "semitrans/linalg.hpp"
#include "semitrans/norm_model.hpp"

namespace semitrans {

/// Curvature of the graph of f at a point with f' = fp, f'' = fpp.
double curvature_graph(double fp, double fpp);

/// Curvature of a level set f(x, y) = const from the gradient and Hessian of f.
/// Throws SingularPoint when the gradient vanishes.
double curvature_implicit(Vec2 grad, Sym2 hess);

/// Curvature of a regular parametric curve from its first two derivatives.
double curvature_parametric(Vec2 d1, Vec2 d2);

/// Curvature of the polar curve r = g(theta).
double curvature_polar(double g, double gp, double gpp);

/// Curvature of the dual sphere at the functional f supporting x, from the curvature kappa of the
/// sphere at x. Zero and infinite curvature swap.
double dual_curvature(double kappa, Vec2 x, Vec2 f);

struct CurvatureProfile {
    std::vector<double> thetas;
    std::vector<double> kappas;  // +infinity where the sphere has a corner or infinite curvature
    double kappa_min = 0.0;
    double kappa_max = 0.0;
};

/// Curvature at n equally spaced polar angles.
CurvatureProfile profile(const NormModel& model, std::size_t n);

std::string profile_csv(const CurvatureProfile& p);

struct ScaleLawResult {
    double kappa_before = 0.0;
    double kappa_after = 0.0;
    double ratio = 0.0;
    double expected_ratio = 0.0;
    double relative_error = 0.0;
    bool holds = false;
};

/// Numeric curvature at a of the image sphere L^{aa}_eps[S] against the (1-eps)^-2 law.
ScaleLawResult scale_law_check(const NormModel& model, const SpherePoint& a, double eps);

/// Curvature of the curve L[S] at L(x), x = radial_point(theta), via 5-point differences.
double image_curvature(const NormModel& model, const LinearMap2& L, double theta);

}  // namespace semitrans
