#include "semitrans/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "numeric.hpp"
#include "semitrans/error.hpp"

namespace semitrans {

std::vector<double> modulus_grid(double hi, std::size_t n) {
    std::vector<double> g(n);
    const double a = std::log(kModulusGridMin), b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    g.back() = hi;
    return g;
}

namespace {

constexpr std::size_t kUcSweep = 1024;

// 1 - ||(x+y)/2|| for the y on the sphere past x with ||x - y|| = eps.
double uc_at(const NormModel& model, double theta, double eps) {
    const Vec2 x = model.radial_point(theta);
    auto f = [&](double phi) { return model.gauge(x - model.radial_point(phi)) - eps; };
    // at eps = 2 the far end is the root itself
    const double phi = f(theta + kPi) >= 0.0 ? detail::toms_root(f, theta, theta + kPi) : theta + kPi;
    const Vec2 y = model.radial_point(phi);
    return 1.0 - model.gauge((x + y) * 0.5);
}

}  // namespace

double delta_uc(const NormModel& model, double eps) {
    if (!(eps > 0.0 && eps <= 2.0)) throw Error(ErrorCode::BadEps, "delta_uc needs eps in (0, 2]");
    std::vector<double> v(kUcSweep);
    for (std::size_t i = 0; i < kUcSweep; ++i) v[i] = uc_at(model, kTwoPi * static_cast<double>(i) / kUcSweep, eps);
    std::vector<std::size_t> idx(kUcSweep);
    for (std::size_t i = 0; i < kUcSweep; ++i) idx[i] = i;
    std::partial_sort(idx.begin(), idx.begin() + 3, idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    double best = v[idx[0]];
    const double step = kTwoPi / kUcSweep;
    for (int k = 0; k < 3; ++k) {
        const double t0 = kTwoPi * static_cast<double>(idx[k]) / kUcSweep;
        const auto r = detail::minimize([&](double t) { return uc_at(model, t, eps); }, t0 - step, t0 + step, 30);
        best = std::min(best, r.second);
    }
    return std::clamp(best, 0.0, 1.0);
}

namespace {

// 1 - the largest rho with rho x +- y in the ball, y = eps along angle a.
double strong_at(const NormModel& model, Vec2 x, double a, double eps) {
    const Vec2 y = model.radial_point(a) * eps;
    auto g = [&](double rho) { return std::max(model.gauge(x * rho + y), model.gauge(x * rho - y)); };
    if (g(1.0) <= 1.0) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) <= 1.0 ? lo : hi) = mid;
    }
    return 1.0 - lo;
}

}  // namespace

double delta_strong(const NormModel& model, const SpherePoint& x, double eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorCode::BadEps, "delta_strong needs eps in (0, 1]");
    constexpr int kDirections = 512;
    const double step = kPi / kDirections;
    std::vector<double> v(kDirections);
    for (int k = 0; k < kDirections; ++k) v[k] = strong_at(model, x.point, step * k, eps);
    std::vector<int> idx(kDirections);
    for (int k = 0; k < kDirections; ++k) idx[k] = k;
    std::partial_sort(idx.begin(), idx.begin() + 3, idx.end(), [&](int a, int b) { return v[a] < v[b]; });
    double best = v[idx[0]];
    if (best == 0.0) return 0.0;
    for (int k = 0; k < 3; ++k) {
        const double a0 = step * idx[k];
        const auto r = detail::minimize([&](double a) { return strong_at(model, x.point, a, eps); }, a0 - step, a0 + step, 30);
        best = std::min(best, r.second);
    }
    return std::max(best, 0.0);
}

ModulusCurve uc_curve(const NormModel& model, const std::vector<double>& eps_grid) {
    ModulusCurve c;
    c.kind = ModulusKind::UC;
    c.eps_grid = eps_grid;
    for (double e : eps_grid) c.values.push_back(delta_uc(model, e));
    c.power2_coeff = power2_fit(c);
    return c;
}

std::span<const double> NormModel::delta_table() const {
    std::call_once(cache_->delta_once, [this] {
        for (double e : modulus_grid()) cache_->delta_values.push_back(delta_uc(*this, e));
    });
    return cache_->delta_values;
}

ModulusCurve uc_curve(const NormModel& model) {
    ModulusCurve c;
    c.kind = ModulusKind::UC;
    c.eps_grid = modulus_grid();
    const auto t = model.delta_table();
    c.values.assign(t.begin(), t.end());
    c.power2_coeff = power2_fit(c);
    return c;
}

ModulusCurve strong_curve(const NormModel& model, const SpherePoint& x, const std::vector<double>& eps_grid) {
    ModulusCurve c;
    c.kind = ModulusKind::StrongExtremality;
    c.x_theta = x.theta;
    c.eps_grid = eps_grid;
    for (double e : eps_grid) c.values.push_back(delta_strong(model, x, e));
    c.power2_coeff = power2_fit(c);
    return c;
}

std::optional<double> power2_fit(const ModulusCurve& curve) {
    if (curve.eps_grid.empty()) return std::nullopt;
    double c = kInfinity;
    for (std::size_t i = 0; i < curve.eps_grid.size(); ++i) {
        const double e = curve.eps_grid[i];
        c = std::min(c, curve.values[i] / (e * e));
    }
    if (!(c >= 1e-6)) return std::nullopt;
    return c;
}

double curve_lookup(const ModulusCurve& curve, double s) {
    const auto it = std::upper_bound(curve.eps_grid.begin(), curve.eps_grid.end(), s);
    if (it == curve.eps_grid.begin()) return 0.0;
    return curve.values[static_cast<std::size_t>(it - curve.eps_grid.begin()) - 1];
}

Decomposition decomposition_check(const ModulusCurve& curve, const NormModel& model, const SpherePoint& x, Vec2 z) {
    if (!x.smooth) throw Error(ErrorCode::NonSmoothPoint, "decomposition needs a smooth point");
    Decomposition d;
    d.t = dot(x.support, z);
    d.u = z - x.point * d.t;
    d.delta_hat = curve_lookup(curve, model.gauge(d.u));
    d.holds = d.t * d.t + d.delta_hat <= 1.0 + 1e-4;
    return d;
}

Decomposition decomposition_check(const NormModel& model, const SpherePoint& x, Vec2 z) {
    return decomposition_check(uc_curve(model), model, x, z);
}

std::string curve_csv(const ModulusCurve& curve) {
    std::ostringstream os;
    os.precision(17);
    os << "eps,delta\n";
    for (std::size_t i = 0; i < curve.eps_grid.size(); ++i) os << curve.eps_grid[i] << ',' << curve.values[i] << '\n';
    return os.str();
}

}  // namespace semitrans
