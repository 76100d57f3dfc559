#include "semitrans/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "semitrans/error.hpp"

namespace semitrans {

double curvature_graph(double fp, double fpp) {
    return std::abs(fpp) / std::pow(1.0 + fp * fp, 1.5);
}

double curvature_implicit(Vec2 grad, Sym2 hess) {
    const double n = norm2(grad);
    if (n < 1e-12) throw Error(ErrorCode::SingularPoint, "gradient vanishes");
    const double fx = grad.x, fy = grad.y;
    const double num = hess.a * fy * fy - 2.0 * hess.b * fx * fy + hess.c * fx * fx;
    return std::abs(num) / (n * n * n);
}

double curvature_parametric(Vec2 d1, Vec2 d2) {
    const double s = norm2(d1);
    if (s < 1e-14) throw Error(ErrorCode::SingularPoint, "parametrisation is not regular");
    return std::abs(cross(d1, d2)) / (s * s * s);
}

double curvature_polar(double g, double gp, double gpp) {
    const double s = g * g + gp * gp;
    if (s <= 0.0) throw Error(ErrorCode::SingularPoint, "g and g' both vanish");
    return std::abs(2.0 * gp * gp + g * g - g * gpp) / std::pow(s, 1.5);
}

double dual_curvature(double kappa, Vec2 x, Vec2 f) {
    const Vec2 u = f / norm2(f);
    const double h = dot(u, x), hp = dot(rot90(u), x);
    const double radius = kappa == 0.0 ? kInfinity : (std::isinf(kappa) ? 0.0 : 1.0 / kappa);
    return radius * h * h * h / std::pow(h * h + hp * hp, 1.5);
}

CurvatureProfile profile(const NormModel& model, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::BadParameter, "profile needs n > 0");
    CurvatureProfile p;
    p.thetas.resize(n);
    p.kappas.resize(n);
    p.kappa_min = kInfinity;
    p.kappa_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        const SpherePoint sp = model.sphere_point(t);
        p.thetas[i] = t;
        p.kappas[i] = sp.curvature;
        p.kappa_min = std::min(p.kappa_min, sp.curvature_lo);
        p.kappa_max = std::max(p.kappa_max, sp.curvature);
    }
    return p;
}

std::string profile_csv(const CurvatureProfile& p) {
    std::ostringstream os;
    os.precision(17);
    os << "theta,kappa\n";
    for (std::size_t i = 0; i < p.thetas.size(); ++i) {
        os << p.thetas[i] << ',';
        if (std::isinf(p.kappas[i])) os << "inf";
        else os << p.kappas[i];
        os << '\n';
    }
    return os.str();
}

double image_curvature(const NormModel& model, const LinearMap2& L, double theta) {
    const double h = kTwoPi / 8192.0;
    Vec2 q[5];
    for (int k = 0; k < 5; ++k) q[k] = L(model.radial_point(theta + (k - 2) * h));
    const Vec2 d1 = (q[0] - q[1] * 8.0 + q[3] * 8.0 - q[4]) / (12.0 * h);
    const Vec2 d2 = (q[0] * -1.0 + q[1] * 16.0 - q[2] * 30.0 + q[3] * 16.0 - q[4]) / (12.0 * h * h);
    return curvature_parametric(d1, d2);
}

ScaleLawResult scale_law_check(const NormModel& model, const SpherePoint& a, double eps) {
    if (!(eps >= 0.0 && eps < 1.0)) throw Error(ErrorCode::BadEps, "eps must lie in [0, 1)");
    if (!a.smooth || a.infinite_curvature()) throw Error(ErrorCode::NonSmoothPoint, "scale law needs a smooth point");
    const LinearMap2 frame = LinearMap2::from_columns(a.point, a.tangent);
    const LinearMap2 image = LinearMap2::from_columns(a.point, a.tangent * (1.0 - eps));
    const LinearMap2 L = image * frame.inverse();
    ScaleLawResult r;
    r.kappa_before = image_curvature(model, LinearMap2::identity(), a.theta);
    r.kappa_after = image_curvature(model, L, a.theta);
    r.expected_ratio = 1.0 / ((1.0 - eps) * (1.0 - eps));
    r.ratio = r.kappa_before > 0.0 ? r.kappa_after / r.kappa_before : 0.0;
    r.relative_error = r.kappa_before > 0.0 ? std::abs(r.ratio - r.expected_ratio) / r.expected_ratio : kInfinity;
    r.holds = r.relative_error < 1e-4;
    return r;
}

}  // namespace semitrans
