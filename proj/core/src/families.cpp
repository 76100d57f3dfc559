#include "families.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "semitrans/curvature.hpp"
#include "semitrans/error.hpp"

namespace semitrans::detail {
namespace {

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

struct SideJet {
    Vec2 grad;
    double kappa = 0.0;
};

/// Jet of the l_p gauge at a point of its sphere. For p = 1 the face normal is chosen by the quadrant signs.
SideJet lp_side_jet(Vec2 x, double p, double sx, double sy) {
    if (p == 1.0) return {{sx, sy}, 0.0};
    if (p == 2.0) return {x, 1.0};
    const double ax = std::abs(x.x), ay = std::abs(x.y);
    const Vec2 g{sgn(x.x) * std::pow(ax, p - 1.0), sgn(x.y) * std::pow(ay, p - 1.0)};
    if (p < 2.0 && (ax == 0.0 || ay == 0.0)) return {g, kInfinity};
    const Sym2 hess = (Sym2{std::pow(ax, p - 2.0), 0.0, std::pow(ay, p - 2.0)} - Sym2::outer(g)) * (p - 1.0);
    return {g, curvature_implicit(g, hess)};
}

Vec2 lp_support_point(Vec2 u, double p) {
    const double q = p / (p - 1.0);
    const Vec2 y{sgn(u.x) * std::pow(std::abs(u.x), q - 1.0), sgn(u.y) * std::pow(std::abs(u.y), q - 1.0)};
    return y / lp_gauge(y, p);
}

// ---------------------------------------------------------------- Polygon

class PolygonFamily final : public GaugeFamily {
public:
    explicit PolygonFamily(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
        const std::size_t n = vertices_.size();
        normals_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 a = vertices_[i], b = vertices_[(i + 1) % n];
            const Vec2 e = b - a;
            normals_.push_back(Vec2{e.y, -e.x} / cross(a, b));
        }
    }

    double gauge(Vec2 v) const override {
        double m = 0.0;
        for (const Vec2& n : normals_) m = std::max(m, dot(n, v));
        return m;
    }

    LocalJet local(Vec2 x) const override {
        const double g = gauge(x);
        const std::size_t n = normals_.size();
        std::size_t first = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (dot(normals_[i], x) >= g * (1.0 - 1e-12)) {
                // Facets i-1 and i meet at vertex i.
                const std::size_t prev = (i + n - 1) % n;
                if (dot(normals_[prev], x) >= g * (1.0 - 1e-12)) return {normals_[prev], normals_[i], kInfinity, kInfinity};
                if (first == n) first = i;
            }
        }
        return {normals_[first], normals_[first], 0.0, 0.0};
    }

    std::optional<SupportFace> support_face(Vec2 u) const override {
        const std::size_t n = vertices_.size();
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (dot(u, vertices_[i]) > dot(u, vertices_[best])) best = i;
        const double m = dot(u, vertices_[best]);
        const double tol = 1e-12 * std::max(1.0, std::abs(m));
        const std::size_t next = (best + 1) % n, prev = (best + n - 1) % n;
        if (dot(u, vertices_[next]) >= m - tol) return SupportFace{vertices_[best], vertices_[next]};
        if (dot(u, vertices_[prev]) >= m - tol) return SupportFace{vertices_[prev], vertices_[best]};
        return SupportFace{vertices_[best], vertices_[best]};
    }

    bool c2() const override { return false; }

    std::vector<double> feature_angles() const override {
        std::vector<double> out;
        for (const Vec2& v : vertices_) out.push_back(wrap_angle(angle_of(v)));
        return out;
    }

private:
    std::vector<Vec2> vertices_;
    std::vector<Vec2> normals_;
};

// ---------------------------------------------------------------- l_p, 1 < p < inf

class LpFamily final : public GaugeFamily {
public:
    explicit LpFamily(double p) : p_(p) {}

    double gauge(Vec2 v) const override { return lp_gauge(v, p_); }

    LocalJet local(Vec2 x) const override {
        const Vec2 xh = x / gauge(x);
        const SideJet j = lp_side_jet(xh, p_, sgn(xh.x), sgn(xh.y));
        return {j.grad, j.grad, j.kappa, j.kappa};
    }

    std::optional<SupportFace> support_face(Vec2 u) const override {
        const Vec2 y = lp_support_point(u, p_);
        return SupportFace{y, y};
    }

    bool c2() const override { return p_ >= 2.0; }

    std::vector<double> feature_angles() const override { return {0.0, kPi / 2, kPi, 1.5 * kPi}; }

private:
    double p_;
};

// ---------------------------------------------------------------- polar r = g(theta)

class PolarFamily final : public GaugeFamily {
public:
    explicit PolarFamily(std::vector<Harmonic> h) : harmonics_(std::move(h)) {}

    double gauge(Vec2 v) const override {
        const double r = norm2(v);
        if (r == 0.0) return 0.0;
        return r / eval_harmonics(harmonics_, angle_of(v)).g;
    }

    LocalJet local(Vec2 x) const override {
        const double th = angle_of(x);
        const PolarJet j = eval_harmonics(harmonics_, th);
        const Vec2 u = unit(th);
        const Vec2 grad = (u - rot90(u) * (j.gp / j.g)) / j.g;
        const double k = curvature_polar(j.g, j.gp, j.gpp);
        return {grad, grad, k, k};
    }

    bool c2() const override { return true; }

private:
    std::vector<Harmonic> harmonics_;
};

// ---------------------------------------------------------------- quadrant mix

class QuadrantMixFamily final : public GaugeFamily {
public:
    QuadrantMixFamily(double p, double q) : p_(p), q_(q) {}

    double gauge(Vec2 v) const override { return lp_gauge(v, v.x * v.y >= 0.0 ? p_ : q_); }

    LocalJet local(Vec2 x) const override {
        Vec2 xh = x / gauge(x);
        // cos(pi/2) and friends land within rounding of an axis
        if (std::abs(xh.x) <= 1e-14) xh.x = 0.0;
        if (std::abs(xh.y) <= 1e-14) xh.y = 0.0;
        if (xh.x * xh.y != 0.0) {
            const SideJet j = lp_side_jet(xh, xh.x * xh.y > 0.0 ? p_ : q_, sgn(xh.x), sgn(xh.y));
            return {j.grad, j.grad, j.kappa, j.kappa};
        }
        // On an axis: the quadrants just before and just after in angle.
        const Vec2 r = rot90(xh);
        auto side = [&](double dir) {
            const double sx = xh.x != 0.0 ? sgn(xh.x) : sgn(dir * r.x);
            const double sy = xh.y != 0.0 ? sgn(xh.y) : sgn(dir * r.y);
            return lp_side_jet(xh, sx * sy > 0.0 ? p_ : q_, sx, sy);
        };
        const SideJet a = side(-1.0), b = side(1.0);
        return {a.grad, b.grad, std::min(a.kappa, b.kappa), std::max(a.kappa, b.kappa)};
    }

    std::optional<SupportFace> support_face(Vec2 u) const override {
        if (p_ == 1.0 || q_ == 1.0) return std::nullopt;
        if (u.x == 0.0 || u.y == 0.0) {
            const Vec2 e = u.x == 0.0 ? Vec2{0.0, sgn(u.y)} : Vec2{sgn(u.x), 0.0};
            return SupportFace{e, e};
        }
        const Vec2 y = lp_support_point(u, u.x * u.y > 0.0 ? p_ : q_);
        return SupportFace{y, y};
    }

    bool c2() const override { return p_ == 2.0 && q_ == 2.0; }

    std::vector<double> feature_angles() const override { return {0.0, kPi / 2, kPi, 1.5 * kPi}; }

private:
    double p_, q_;
};

// ---------------------------------------------------------------- intersection of two ellipses

class EllipseIntersectionFamily final : public GaugeFamily {
public:
    EllipseIntersectionFamily(Sym2 a, Sym2 b) : forms_{a, b} {}

    double gauge(Vec2 v) const override {
        return std::sqrt(std::max(forms_[0].quad(v), forms_[1].quad(v)));
    }

    LocalJet local(Vec2 x) const override {
        const Vec2 xh = x / gauge(x);
        const double q0 = forms_[0].quad(xh), q1 = forms_[1].quad(xh);
        auto side = [&](const Sym2& m) {
            const Vec2 g = m.apply(xh);
            return SideJet{g, curvature_implicit(g, m - Sym2::outer(g))};
        };
        if (std::abs(q0 - q1) <= 1e-12) {
            const SideJet a = side(forms_[0]), b = side(forms_[1]);
            return {a.grad, b.grad, std::min(a.kappa, b.kappa), std::max(a.kappa, b.kappa)};
        }
        const SideJet j = side(q0 > q1 ? forms_[0] : forms_[1]);
        return {j.grad, j.grad, j.kappa, j.kappa};
    }

    bool c2() const override { return false; }

    std::vector<double> feature_angles() const override {
        // Directions with v^T (A - B) v = 0.
        const Sym2 d = forms_[0] - forms_[1];
        std::vector<double> out;
        const int n = 4096;
        for (int i = 0; i < n; ++i) {
            const double t0 = kPi * i / n, t1 = kPi * (i + 1) / n;
            const double f0 = d.quad(unit(t0)), f1 = d.quad(unit(t1));
            if ((f0 <= 0.0) != (f1 <= 0.0)) {
                double lo = t0, hi = t1;
                for (int k = 0; k < 60; ++k) {
                    const double m = 0.5 * (lo + hi);
                    if ((d.quad(unit(m)) <= 0.0) == (f0 <= 0.0)) lo = m; else hi = m;
                }
                out.push_back(0.5 * (lo + hi));
                out.push_back(0.5 * (lo + hi) + kPi);
            }
        }
        return out;
    }

private:
    std::array<Sym2, 2> forms_;
};

// ---------------------------------------------------------------- chain of circular arcs

class ArcChainFamily final : public GaugeFamily {
public:
    explicit ArcChainFamily(std::vector<Arc> arcs) {
        segs_.reserve(arcs.size());
        for (const Arc& a : arcs) {
            Segment s;
            s.center = a.center;
            s.radius = a.radius;
            s.p0 = a.start_point();
            s.n0 = -unit(a.start_angle);
            s.alpha0 = angle_of(s.p0);
            s.alpha1 = angle_of(a.end_point());
            segs_.push_back(s);
        }
        // Unwrap start angles into an increasing sequence.
        for (std::size_t i = 1; i < segs_.size(); ++i) {
            while (segs_[i].alpha0 < segs_[i - 1].alpha0) segs_[i].alpha0 += kTwoPi;
        }
        for (auto& s : segs_) {
            while (s.alpha1 < s.alpha0) s.alpha1 += kTwoPi;
        }
    }

    double gauge(Vec2 v) const override {
        const double r = norm2(v);
        if (r == 0.0) return 0.0;
        const Vec2 u = v / r;
        return r / hit(segs_[locate(angle_of(u))], u);
    }

    LocalJet local(Vec2 x) const override {
        const double phi = angle_of(x);
        const std::size_t i = locate(phi);
        const double rel = lift(phi);
        const std::size_t n = segs_.size();
        std::size_t j = i;
        if (rel - segs_[i].alpha0 < 1e-11) j = (i + n - 1) % n;
        else if (segs_[i].alpha1 - rel < 1e-11) j = (i + 1) % n;
        const Vec2 xs = x / gauge(x);
        auto side = [&](const Segment& s) {
            Vec2 o = xs - s.center;
            o = o / norm2(o);
            return SideJet{o / dot(o, xs), 1.0 / s.radius};
        };
        const SideJet a = side(segs_[j]), b = side(segs_[i]);
        return {a.grad, b.grad, std::min(a.kappa, b.kappa), std::max(a.kappa, b.kappa)};
    }

    bool c2() const override { return false; }

    std::vector<double> feature_angles() const override {
        std::vector<double> out;
        for (const auto& s : segs_) {
            out.push_back(wrap_angle(s.alpha0));
            out.push_back(wrap_angle(0.5 * (s.alpha0 + s.alpha1)));
        }
        return out;
    }

private:
    struct Segment {
        Vec2 center;
        double radius = 1.0;
        Vec2 p0;      // start point
        Vec2 n0;      // inward unit normal at p0
        double alpha0 = 0.0;  // polar angle of the start point (unwrapped)
        double alpha1 = 0.0;  // polar angle of the end point
    };

    double lift(double phi) const {
        const double base = segs_.front().alpha0;
        return base + wrap_angle(phi - base);
    }

    std::size_t locate(double phi) const {
        const double a = lift(phi);
        auto it = std::upper_bound(segs_.begin(), segs_.end(), a,
                                   [](double v, const Segment& s) { return v < s.alpha0; });
        return static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - segs_.begin()) - 1));
    }

    /// Distance along the unit ray u to the circle of segment s; stable for very large radii.
    static double hit(const Segment& s, Vec2 u) {
        const double B = dot(u, s.p0) + s.radius * dot(u, s.n0);
        const double C = dot(s.p0, s.p0) + 2.0 * s.radius * dot(s.p0, s.n0);
        const double q = std::sqrt(std::max(0.0, B * B - C));
        return B >= 0.0 ? B + q : C / (B - q);
    }

    std::vector<Segment> segs_;
};

// ---------------------------------------------------------------- blend sqrt(N^2 + eps |.|^2)

class BlendFamily final : public GaugeFamily {
public:
    BlendFamily(std::shared_ptr<const NormModel> base, double eps, double scale)
        : base_(std::move(base)), eps_(eps), scale_(scale) {}

    double gauge(Vec2 v) const override {
        const double nb = base_->gauge(v);
        return scale_ * std::sqrt(nb * nb + eps_ * dot(v, v));
    }

    LocalJet local(Vec2 x) const override {
        const double nb = base_->gauge(x);
        const Vec2 xh = x / nb;
        const LocalJet bj = base_->local(xh);
        auto side = [&](Vec2 g, double kb) {
            const double f = nb * nb + eps_ * dot(x, x);
            const Vec2 gradF = g * (2.0 * nb) + x * (2.0 * eps_);
            const Vec2 grad = gradF * (scale_ / (2.0 * std::sqrt(f)));
            if (!std::isfinite(kb)) return SideJet{grad, kInfinity};
            // Hessian of a 1-homogeneous gauge at a sphere point: kappa |g|^3 w w^T with w = rot90(x).
            const double gn = norm2(g);
            const Sym2 hb = Sym2::outer(rot90(xh)) * (kb * gn * gn * gn);
            const Sym2 hessF = (Sym2::outer(g) + hb + Sym2::identity() * eps_) * 2.0;
            return SideJet{grad, curvature_implicit(gradF, hessF)};
        };
        const SideJet a = side(bj.grad_lo, bj.kappa_lo), b = side(bj.grad_hi, bj.kappa_hi);
        return {a.grad, b.grad, std::min(a.kappa, b.kappa), std::max(a.kappa, b.kappa)};
    }

    bool c2() const override { return base_->is_c2(); }

    std::vector<double> feature_angles() const override { return base_->feature_angles(); }

private:
    std::shared_ptr<const NormModel> base_;
    double eps_, scale_;
};

// ---------------------------------------------------------------- dual norm

class DualFamily final : public GaugeFamily {
public:
    explicit DualFamily(std::shared_ptr<const NormModel> base) : base_(std::move(base)) {}

    double gauge(Vec2 f) const override { return base_->support_value(f); }

    LocalJet local(Vec2 x) const override {
        const Vec2 u = x / norm2(x);
        const SupportFace face = base_->support_face(u);
        if (norm2(face.hi - face.lo) > 1e-9) {
            // A face of the base ball is a corner of the dual sphere.
            return {face.lo / dot(face.lo, x), face.hi / dot(face.hi, x), kInfinity, kInfinity};
        }
        const Vec2 xb = face.lo;
        const LocalJet bj = base_->local(xb);
        const double h = dot(u, xb), hp = dot(rot90(u), xb);
        const double factor = h * h * h / std::pow(h * h + hp * hp, 1.5);
        // Radius of curvature of the base becomes curvature of the dual.
        auto radius = [](double k) { return k == 0.0 ? kInfinity : (std::isinf(k) ? 0.0 : 1.0 / k); };
        const Vec2 g = xb / dot(xb, x / base_->support_value(x));
        const double lo = radius(bj.kappa_hi) * factor, hi = radius(bj.kappa_lo) * factor;
        return {g, g, lo, hi};
    }

    bool c2() const override { return false; }

private:
    std::shared_ptr<const NormModel> base_;
};

}  // namespace

double lp_gauge(Vec2 v, double p) {
    const double ax = std::abs(v.x), ay = std::abs(v.y);
    if (std::isinf(p)) return std::max(ax, ay);
    if (p == 1.0) return ax + ay;
    if (p == 2.0) return std::hypot(ax, ay);
    const double m = std::max(ax, ay);
    if (m == 0.0) return 0.0;
    return m * std::pow(std::pow(ax / m, p) + std::pow(ay / m, p), 1.0 / p);
}

PolarJet eval_harmonics(const std::vector<Harmonic>& harmonics, double theta) {
    PolarJet j;
    for (const Harmonic& h : harmonics) {
        const double n = h.n;
        const double c = std::cos(n * theta), s = std::sin(n * theta);
        j.g += h.cos_amp * c + h.sin_amp * s;
        j.gp += n * (-h.cos_amp * s + h.sin_amp * c);
        j.gpp += -n * n * (h.cos_amp * c + h.sin_amp * s);
    }
    return j;
}

std::shared_ptr<const GaugeFamily> lp_family(double p) {
    if (p == 1.0) return polygon_family({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    if (std::isinf(p)) return polygon_family({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    return std::make_shared<LpFamily>(p);
}

std::shared_ptr<const GaugeFamily> polygon_family(std::vector<Vec2> vertices) {
    return std::make_shared<PolygonFamily>(std::move(vertices));
}

std::shared_ptr<const GaugeFamily> polar_family(std::vector<Harmonic> harmonics) {
    return std::make_shared<PolarFamily>(std::move(harmonics));
}

std::shared_ptr<const GaugeFamily> quadrant_mix_family(double p, double q) {
    return std::make_shared<QuadrantMixFamily>(p, q);
}

std::shared_ptr<const GaugeFamily> ellipse_intersection_family(Sym2 first, Sym2 second) {
    return std::make_shared<EllipseIntersectionFamily>(first, second);
}

std::shared_ptr<const GaugeFamily> arc_chain_family(std::vector<Arc> arcs) {
    return std::make_shared<ArcChainFamily>(std::move(arcs));
}

std::shared_ptr<const GaugeFamily> blend_family(std::shared_ptr<const NormModel> base, double eps, double scale) {
    return std::make_shared<BlendFamily>(std::move(base), eps, scale);
}

std::shared_ptr<const GaugeFamily> dual_family(std::shared_ptr<const NormModel> base) {
    return std::make_shared<DualFamily>(std::move(base));
}

}  // namespace semitrans::detail
