#include "semitrans/semigroup.hpp"

#include <algorithm>
#include <cmath>

#include "numeric.hpp"
#include "semitrans/error.hpp"
#include "semitrans/geometry_core.hpp"
#include "semitrans/tangency.hpp"

namespace semitrans {

std::string_view to_string(Reach r) {
    switch (r) {
        case Reach::AllSphere: return "AllSphere";
        case Reach::AllButSet: return "AllButSet";
        case Reach::DenseCandidate: return "DenseCandidate";
        case Reach::Restricted: return "Restricted";
    }
    return "Restricted";
}

Vec2 perp(const NormModel& /*model*/, const SpherePoint& a) {
    if (!a.smooth) throw Error(ErrorCode::NonSmoothPoint, "a^perp needs a smooth point");
    return a.tangent;
}

LinearMap2 make_L_ab(const NormModel& model, const SpherePoint& a, const SpherePoint& b, double eps) {
    if (eps == 1.0) throw Error(ErrorCode::Degenerate, "eps = 1 collapses the tangent direction");
    if (!(eps >= 0.0 && eps < 1.0)) throw Error(ErrorCode::BadEps, "eps must lie in [0, 1)");
    const LinearMap2 from = LinearMap2::from_columns(a.point, perp(model, a));
    const LinearMap2 to = LinearMap2::from_columns(b.point, perp(model, b) * (1.0 - eps));
    return to * from.inverse();
}

ContractionCertificate certify(const NormModel& model, const LinearMap2& T) {
    if (!T.invertible()) throw Error(ErrorCode::Singular, "certify needs an invertible map");
    ContractionCertificate c;
    c.T = T;
    const OperatorNorm on = operator_norm(model, T);
    c.op_norm = on.value;
    c.witness_angle = on.angle;
    c.inv_norm = operator_norm(model, T.inverse()).value;
    c.is_contractive = c.op_norm <= 1.0 + c.tolerance;
    c.boundary = c.is_contractive && c.op_norm > 1.0;
    return c;
}

bool is_contraction(const NormModel& model, const LinearMap2& T, double tolerance) {
    const auto pts = model.cache();
    const std::size_t n = pts.size();
    const double bound = 1.0 + tolerance;
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        vals[i] = model.gauge(T(pts[i]));
        if (vals[i] > bound) return false;
    }
    // the grid can miss the top by O(step^2): refine the three best peaks
    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < n; ++i) {
        if (vals[i] >= vals[(i + n - 1) % n] && vals[i] >= vals[(i + 1) % n]) peaks.push_back(i);
    }
    std::partial_sort(peaks.begin(), peaks.begin() + std::min<std::size_t>(3, peaks.size()), peaks.end(),
                      [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    const double step = kTwoPi / static_cast<double>(n);
    auto f = [&](double t) { return model.gauge(T(model.radial_point(t))); };
    for (std::size_t k = 0; k < std::min<std::size_t>(3, peaks.size()); ++k) {
        const double t0 = NormModel::cache_angle(peaks[k]);
        if (detail::maximize(f, t0 - step, t0 + step).second > bound) return false;
    }
    return true;
}

bool is_flat(const NormModel& model, const SpherePoint& y) {
    if (y.curvature > 1e-12) return false;
    const double step = kTwoPi / static_cast<double>(NormModel::kCacheSize);
    for (int k = -4; k <= 4; ++k) {
        const Vec2 p = model.radial_point(y.theta + k * step);
        if (std::abs(dot(y.support, p) - 1.0) > 1e-9) return false;
    }
    return true;
}

ContractionCertificate flat_transport(const NormModel& model, const SpherePoint& x, const SpherePoint& y, double eps) {
    if (!is_flat(model, y)) throw Error(ErrorCode::NotFlat, "target point is not flat");
    if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorCode::BadEps, "flat transport needs eps in (0, 1]");
    const LinearMap2 from = LinearMap2::from_columns(x.point, x.tangent);
    const LinearMap2 from_inv = from.inverse();
    ContractionCertificate c;
    for (int i = 0; i < 60; ++i, eps *= 0.5) {
        const LinearMap2 T = LinearMap2::from_columns(y.point, y.tangent * eps) * from_inv;
        c = certify(model, T);
        if (c.is_contractive) return c;
    }
    throw Error(ErrorCode::TangencySolveFailed, "flat transport did not certify");
}

std::optional<ContractionCertificate> orbit_map(const NormModel& model, const SpherePoint& x, const SpherePoint& y) {
    const bool x_smooth = x.smooth, y_smooth = y.smooth;
    if (x_smooth && y_smooth) {
        const auto F = outer_ellipse(model, x);
        const auto E = inner_ellipse(model, y);
        if (F && E) {
            const Sym2 F_half = F->M.power(0.5);
            const Sym2 E_half = E->M.power(0.5);
            const Vec2 fx = F_half.apply(x.point), ey = E_half.apply(y.point);
            const LinearMap2 Q = LinearMap2::rotation(angle_of(ey) - angle_of(fx));
            const LinearMap2 T = LinearMap2::from_sym(E_half.inverse()) * Q * LinearMap2::from_sym(F_half);
            ContractionCertificate c = certify(model, T);
            if (c.is_contractive && model.gauge(T(x.point) - y.point) <= 1e-9) return c;
        }
    }
    if (is_flat(model, y)) {
        try {
            ContractionCertificate c = flat_transport(model, x, y);
            if (model.gauge(c.T(x.point) - y.point) <= 1e-9) return c;
        } catch (const Error&) {
        }
    }
    return std::nullopt;
}

OrbitReport l1_orbit(const NormModel& model, const SpherePoint& x) {
    const auto* lp = std::get_if<LpParams>(&model.params());
    if (!lp || lp->p != 1.0) throw Error(ErrorCode::WrongModel, "l1_orbit needs the l1 model");
    OrbitReport r;
    r.x = x;
    const bool vertex = std::abs(std::abs(x.point.x) - 1.0) < 1e-12 || std::abs(std::abs(x.point.y) - 1.0) < 1e-12;
    if (vertex) {
        r.reachable = Reach::AllSphere;
        r.description = "a vertex of the l1 ball reaches every sphere point";
    } else {
        r.reachable = Reach::AllButSet;
        r.excluded = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        r.description = "every sphere point except the four vertices";
    }
    auto witness = [&](double theta) {
        const SpherePoint y = model.sphere_point(theta);
        if (auto c = orbit_map(model, x, y)) r.witnesses.push_back({y, *c});
    };
    if (!vertex && std::abs(x.point.x - 0.5) < 1e-12 && std::abs(x.point.y - 0.5) < 1e-12) {
        const LinearMap2 T1{0.5, 0.0, 0.5, 1.0};
        r.witnesses.push_back({model.sphere_point_at({0.25, 0.75}), certify(model, T1)});
    }
    for (double theta : {0.3, 1.2, 2.0, 4.0}) witness(theta);
    return r;
}

double inv_norm_lower_bound(const NormModel& model, const SpherePoint& x, const SpherePoint& y) {
    double rmin = kInfinity, rmax = 0.0;
    for (const Vec2& p : model.cache()) {
        rmin = std::min(rmin, norm2(p));
        rmax = std::max(rmax, norm2(p));
    }
    const double c = (rmax / rmin) * (rmax / rmin);
    if (x.curvature == 0.0 || std::isinf(y.curvature)) return kInfinity;
    if (std::isinf(x.curvature)) return 1.0;
    return std::max(1.0, std::sqrt(y.curvature / (c * x.curvature)));
}

}  // namespace semitrans
