#include "semitrans/tangency.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "numeric.hpp"
#include "semitrans/curvature.hpp"
#include "semitrans/error.hpp"

namespace semitrans {

std::array<double, 2> Ellipse::semi_axes() const {
    const auto ev = M.eigenvalues();
    return {1.0 / std::sqrt(ev[1]), 1.0 / std::sqrt(ev[0])};
}

double Ellipse::area() const { return kPi / std::sqrt(M.det()); }

Vec2 Ellipse::boundary(double phi) const {
    const auto ev = M.eigenvalues();
    const Vec2 major = M.minor_axis();
    return major * (std::cos(phi) / std::sqrt(ev[0])) + rot90(major) * (std::sin(phi) / std::sqrt(ev[1]));
}

// ------------------------------------------------------------------ John ellipse

namespace {

// Centred minimum-volume enclosing ellipse of the symmetric set {+-p_i}: Khachiyan's
// method with Todd-Yildirim away steps, stopped at relative tolerance tol.
Sym2 centred_mvee(std::span<const Vec2> pts, double tol) {
    // Log-barrier Newton on M = [[a, b], [b, c]]: minimise -log det M - mu sum log(1 - p^T M p).
    // The duality gap of each stage is at most mu * |pts|.
    double r2 = 0.0;
    for (const Vec2& p : pts) r2 = std::max(r2, dot(p, p));
    std::array<double, 3> v{0.5 / r2, 0.0, 0.5 / r2};
    auto quad = [](const std::array<double, 3>& m, Vec2 p) { return m[0] * p.x * p.x + 2.0 * m[1] * p.x * p.y + m[2] * p.y * p.y; };
    auto objective = [&](const std::array<double, 3>& m, double mu) {
        const double det = m[0] * m[2] - m[1] * m[1];
        if (!(det > 0.0 && m[0] > 0.0)) return kInfinity;
        double f = -std::log(det);
        for (const Vec2& p : pts) {
            const double slack = 1.0 - quad(m, p);
            if (!(slack > 0.0)) return kInfinity;
            f -= mu * std::log(slack);
        }
        return f;
    };
    const double mu_end = tol / static_cast<double>(pts.size());
    for (double mu = 1e-2; mu >= mu_end * 0.999; mu *= 0.1) {
        for (int it = 0; it < 100; ++it) {
            const double det = v[0] * v[2] - v[1] * v[1];
            const std::array<double, 3> gd{v[2], -2.0 * v[1], v[0]};
            double g[3], H[3][3];
            for (int i = 0; i < 3; ++i) {
                g[i] = -gd[i] / det;
                for (int j = 0; j < 3; ++j) H[i][j] = gd[i] * gd[j] / (det * det);
            }
            H[0][2] -= 1.0 / det;
            H[2][0] -= 1.0 / det;
            H[1][1] += 2.0 / det;
            for (const Vec2& p : pts) {
                const double slack = 1.0 - quad(v, p);
                const double q[3] = {p.x * p.x, 2.0 * p.x * p.y, p.y * p.y};
                for (int i = 0; i < 3; ++i) {
                    g[i] += mu * q[i] / slack;
                    for (int j = 0; j < 3; ++j) H[i][j] += mu * q[i] * q[j] / (slack * slack);
                }
            }
            // Newton direction by Cramer's rule on the 3x3 system
            auto det3 = [](const double A[3][3]) {
                return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                       A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
            };
            const double D = det3(H);
            std::array<double, 3> step{};
            for (int k = 0; k < 3; ++k) {
                double Hk[3][3];
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) Hk[i][j] = j == k ? -g[i] : H[i][j];
                step[k] = det3(Hk) / D;
            }
            const double decrement = -(g[0] * step[0] + g[1] * step[1] + g[2] * step[2]);
            if (!(decrement > 1e-14)) break;
            const double f0 = objective(v, mu);
            double t = 1.0;
            std::array<double, 3> next{};
            for (; t > 1e-12; t *= 0.5) {
                for (int i = 0; i < 3; ++i) next[i] = v[i] + t * step[i];
                if (objective(next, mu) <= f0 - 0.25 * t * decrement) break;
            }
            if (t <= 1e-12) break;
            v = next;
        }
    }
    Sym2 M{v[0], v[1], v[2]};
    double worst = 0.0;
    for (const Vec2& p : pts) worst = std::max(worst, M.quad(p));
    return M * (1.0 / worst);
}

}  // namespace

const Sym2& NormModel::john_form() const {
    std::call_once(cache_->john_once, [this] {
        const auto pts = cache();
        cache_->john = centred_mvee(pts.subspan(0, pts.size() / 2), 1e-9);
    });
    return cache_->john;
}

Ellipse john_ellipse(const NormModel& model) { return {model.john_form()}; }

// ------------------------------------------------------------------ discs

namespace {

Vec2 inward_normal(const SpherePoint& x) { return x.support / norm2(x.support); }

// Radius of the disc tangent at x (centre x - r n) whose circle passes through y.
// Equivalent to |y - c| = r but free of cancellation for huge r.
double through_radius(Vec2 x, Vec2 n, Vec2 y) {
    const double s = dot(x - y, n);
    const double d = dot(y - x, y - x);
    if (s <= 0.0) return kInfinity;
    return d / (2.0 * s);
}

// Closer than this, rounding in the sphere points swamps the depth <x - y, n>.
constexpr double kNearPoint = 5e-4;

// Extremum of through_radius over the sphere, excluding a tiny neighbourhood of x:
// grid over the cache, then Brent around the 8 most extreme local extrema.
// The maximum is +inf when some sphere point lies on the tangent line at x.
double radius_extremum(const NormModel& model, const SpherePoint& x, bool minimum) {
    const Vec2 n = inward_normal(x);
    const auto pts = model.cache();
    const std::size_t m = pts.size();
    const double sign = minimum ? 1.0 : -1.0;
    // Minimised in both cases; excluded points score +inf.
    auto score = [&](Vec2 y) {
        if (norm2(y - x.point) < kNearPoint) return kInfinity;
        return sign * through_radius(x.point, n, y);
    };
    std::vector<double> v(m);
    double best = kInfinity;
    for (std::size_t i = 0; i < m; ++i) {
        v[i] = score(pts[i]);
        best = std::min(best, v[i]);
    }
    if (best == -kInfinity) return kInfinity;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
        if (!std::isinf(v[i]) && v[i] <= v[(i + m - 1) % m] && v[i] <= v[(i + 1) % m]) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    if (idx.size() > 8) idx.resize(8);
    const double step = kTwoPi / static_cast<double>(m);
    for (std::size_t i : idx) {
        const double t0 = NormModel::cache_angle(i);
        const auto [t, val] = detail::minimize([&](double t) { return score(model.radial_point(t)); }, t0 - step, t0 + step);
        (void)t;
        best = std::min(best, val);
    }
    return sign * best;
}

}  // namespace

std::optional<Disc> inner_disc(const NormModel& model, const SpherePoint& x) {
    if (!x.smooth || x.infinite_curvature()) return std::nullopt;
    double r = radius_extremum(model, x, true);
    if (x.curvature > 0.0) r = std::min(r, 1.0 / x.curvature);
    if (!(r >= kMinInnerRadius) || std::isinf(r)) return std::nullopt;
    return Disc{x.point - inward_normal(x) * r, r};
}

std::optional<Disc> outer_disc(const NormModel& model, const SpherePoint& x) {
    if (!(x.curvature_lo > 0.0)) return std::nullopt;
    double r = radius_extremum(model, x, false);
    if (!std::isinf(x.curvature_lo)) r = std::max(r, 1.0 / x.curvature_lo);
    if (!(r <= kMaxOuterRadius)) return std::nullopt;
    return Disc{x.point - inward_normal(x) * r, r};
}

// ------------------------------------------------------------------ ellipses

Ellipse build_inner_ellipse(double h, double kappa_target) {
    if (!(h > 0.0)) throw Error(ErrorCode::BadParameter, "build_inner_ellipse needs h > 0");
    // Through (1,h) with a vertical tangent: B = -C/(2h), A = 1 - Ch/2, and the curvature
    // there is |C|/(2h). Then 4AB - C^2 = 4 kappa, so the form is definite iff kappa > 0.
    const double C = -2.0 * h * kappa_target;
    const double B = -C / (2.0 * h);
    const double A = 1.0 - C * h / 2.0;
    if (!(4.0 * A * B - C * C > 0.0))
        throw Error(ErrorCode::NotPositiveDefinite, "4AB <= C^2: raise kappa_target");
    return Ellipse::from_coeffs(A, B, C);
}

namespace {

struct FamilyFrame {
    Vec2 x, f;  // point and support functional, <f, x> = 1
    Vec2 w;     // tangent direction with unit John length
    Sym2 J;
};

FamilyFrame frame(const NormModel& model, const SpherePoint& x) {
    if (!x.smooth) throw Error(ErrorCode::NonSmoothPoint, "E_b family needs a smooth point");
    FamilyFrame fr{x.point, x.support, rot90(x.support), model.john_form()};
    fr.w = fr.w / std::sqrt(fr.J.quad(fr.w));
    return fr;
}

Sym2 family_form(const FamilyFrame& fr, double b) {
    // P z = z - <f, z> x; M = f f^T + b^2 P^T J P.
    const LinearMap2 P{1.0 - fr.x.x * fr.f.x, -fr.x.x * fr.f.y, -fr.x.y * fr.f.x, 1.0 - fr.x.y * fr.f.y};
    const Vec2 c1{P.m11, P.m21}, c2{P.m12, P.m22};
    const Sym2 PJP{fr.J.quad(c1), dot(c1, fr.J.apply(c2)), fr.J.quad(c2)};
    return Sym2::outer(fr.f) + PJP * (b * b);
}

// Curvature of the family ellipse at x is b^2 * kappa_unit.
double unit_curvature(const FamilyFrame& fr) {
    const double wn = norm2(fr.w);
    return std::abs(cross(fr.x, fr.w)) / (wn * wn * wn);
}

constexpr double kEllipseMargin = 1e-4;

}  // namespace

Ellipse outer_family(const NormModel& model, const SpherePoint& x, double b) {
    if (!(b >= 1e-6)) throw Error(ErrorCode::BadParameter, "E_b needs b >= 1e-6");
    return {family_form(frame(model, x), b)};
}

std::optional<Ellipse> outer_ellipse(const NormModel& model, const SpherePoint& x) {
    if (!x.smooth || !(x.curvature_lo > 0.0)) return std::nullopt;
    const FamilyFrame fr = frame(model, x);
    // B inside E_b iff b^2 v_y^2 <= 1 - t_y^2 on the sphere, with y = t x + v w.
    double b2 = std::isinf(x.curvature_lo) ? kInfinity : x.curvature_lo / unit_curvature(fr);
    const double cw = cross(fr.x, fr.w);
    for (const Vec2& y : model.cache()) {
        if (norm2(y - fr.x) < kNearPoint || norm2(y + fr.x) < kNearPoint) continue;
        const double t = dot(fr.f, y), v = cross(fr.x, y) / cw;
        if (v == 0.0) continue;
        b2 = std::min(b2, std::max(0.0, 1.0 - t * t) / (v * v));
    }
    const double b = std::sqrt(b2) * (1.0 - kEllipseMargin);
    if (!(b >= 1e-6) || std::isinf(b)) return std::nullopt;
    return Ellipse{family_form(fr, b)};
}

std::optional<Ellipse> inner_ellipse(const NormModel& model, const SpherePoint& x) {
    if (!x.smooth || x.infinite_curvature()) return std::nullopt;
    const FamilyFrame fr = frame(model, x);
    // E_b inside B iff every dual sphere point f satisfies f_t^2 + f_v^2 / b^2 <= 1.
    double b2 = x.curvature / unit_curvature(fr);
    for (const Vec2& g : model.dual_sphere()) {
        if (norm2(g - fr.f) < kNearPoint || norm2(g + fr.f) < kNearPoint) continue;
        const double ft = dot(g, fr.x), fv = dot(g, fr.w);
        const double room = 1.0 - ft * ft;
        if (room <= 0.0) return std::nullopt;
        b2 = std::max(b2, fv * fv / room);
    }
    const double b = std::sqrt(b2) * (1.0 + kEllipseMargin);
    if (!(b <= 1e6)) return std::nullopt;
    return Ellipse{family_form(fr, std::max(b, 1e-6))};
}

TangencyReport tangency_report(const NormModel& model, const SpherePoint& x) {
    TangencyReport r;
    r.point = x;
    r.inner_disc = inner_disc(model, x);
    r.outer_disc = outer_disc(model, x);
    if (x.smooth) {
        r.inner_ellipse = inner_ellipse(model, x);
        r.outer_ellipse = outer_ellipse(model, x);
    }
    return r;
}

TangencyReport dual_transfer(const TangencyReport& report, const NormModel& model) {
    const SpherePoint& x = report.point;
    if (!x.smooth) throw Error(ErrorCode::NonSmoothPoint, "dual transfer needs a smooth point");
    TangencyReport d;
    const Vec2 f = x.support;
    d.point.theta = angle_of(f);
    d.point.point = f;
    d.point.support = x.point;
    const Vec2 t = rot90(x.point);
    d.point.tangent = t / model.support_value(t);
    d.point.curvature = dual_curvature(x.curvature_lo, x.point, f);
    d.point.curvature_lo = dual_curvature(x.curvature, x.point, f);
    const detail::SupportFace face = model.support_face(f / norm2(f));
    d.point.smooth = norm2(face.hi - face.lo) <= 1e-9;
    if (report.inner_ellipse) d.outer_ellipse = Ellipse{report.inner_ellipse->M.inverse()};
    if (report.outer_ellipse) d.inner_ellipse = Ellipse{report.outer_ellipse->M.inverse()};

    // Containment on the dual sphere: E* outer means every dual point lies in E*,
    // E* inner means every boundary point of E* has dual gauge at most 1.
    constexpr double tol = 1e-6;
    if (d.outer_ellipse) {
        for (const Vec2& g : model.dual_sphere())
            if (!d.outer_ellipse->contains(g, tol))
                throw Error(ErrorCode::TangencySolveFailed, "transferred outer ellipse misses the dual ball");
    }
    if (d.inner_ellipse) {
        for (int i = 0; i < 1024; ++i) {
            const Vec2 z = d.inner_ellipse->boundary(kTwoPi * i / 1024.0);
            if (model.support_value(z) > 1.0 + tol)
                throw Error(ErrorCode::TangencySolveFailed, "transferred inner ellipse leaves the dual ball");
        }
    }
    return d;
}

}  // namespace semitrans
