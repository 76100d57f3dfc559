#include "semitrans/norm_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "families.hpp"
#include "numeric.hpp"
#include "semitrans/error.hpp"

namespace semitrans {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::NotConvex: return "NotConvex";
        case ErrorCode::NotPeriodic: return "NotPeriodic";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::TangentBreak: return "TangentBreak";
        case ErrorCode::SingularPoint: return "SingularPoint";
        case ErrorCode::NonSmoothPoint: return "NonSmoothPoint";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NotFlat: return "NotFlat";
        case ErrorCode::WrongModel: return "WrongModel";
        case ErrorCode::BadEps: return "BadEps";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::TangencySolveFailed: return "TangencySolveFailed";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Lp: return "lp";
        case Family::Polar: return "polar";
        case Family::QuadrantMix: return "quadrant_mix";
        case Family::Polygon: return "polygon";
        case Family::ArcChain: return "arc_chain";
        case Family::EllipseIntersection: return "ellipse_intersection";
        case Family::Blend: return "blend";
        case Family::CurveNorm: return "curve_norm";
        case Family::Dual: return "dual";
    }
    return "unknown";
}

NormModel::NormModel(std::shared_ptr<const detail::GaugeFamily> impl, ModelParams params, std::string label)
    : impl_(std::move(impl)), params_(std::move(params)), label_(std::move(label)),
      family_(static_cast<Family>(params_.index())) {
    if (const auto* lp = std::get_if<LpParams>(&params_)) {
        euclidean_ = lp->p == 2.0;
        polyhedral_ = lp->p == 1.0 || std::isinf(lp->p);
    } else if (const auto* qm = std::get_if<QuadrantMixParams>(&params_)) {
        euclidean_ = qm->p == 2.0 && qm->q == 2.0;
    } else if (const auto* pol = std::get_if<PolarParams>(&params_)) {
        euclidean_ = std::all_of(pol->harmonics.begin(), pol->harmonics.end(), [](const Harmonic& h) {
            return h.n == 0 ? (h.cos_amp == 1.0) : (h.cos_amp == 0.0 && h.sin_amp == 0.0);
        });
    } else if (family_ == Family::Polygon) {
        polyhedral_ = true;
    }

    auto cache = std::make_shared<Cache>();
    cache->points.resize(kCacheSize);
    for (std::size_t i = 0; i < kCacheSize; ++i) cache->points[i] = radial_point(cache_angle(i));
    cache_ = cache;
    validate();
    // The sphere table needs the point cache (support faces of dual models).
    cache->table.resize(kTableSize);
    for (std::size_t i = 0; i < kTableSize; ++i)
        cache->table[i] = sphere_point(kTwoPi * static_cast<double>(i) / kTableSize);
}

double NormModel::gauge(Vec2 v) const {
    // Evaluate on one closed half-plane so that gauge(-v) == gauge(v) bit for bit.
    if (v.y < 0.0 || (v.y == 0.0 && v.x < 0.0)) v = -v;
    return impl_->gauge(v);
}

Vec2 NormModel::radial_point(double theta) const {
    const Vec2 u = unit(theta);
    return u / gauge(u);
}

detail::LocalJet NormModel::local(Vec2 x) const {
    detail::LocalJet j = impl_->local(x);
    if (norm2(j.grad_lo - j.grad_hi) > kSmoothTol) {
        j.kappa_lo = j.kappa_hi = kInfinity;
    }
    if (j.kappa_lo > kInfiniteCurvature) j.kappa_lo = kInfinity;
    if (j.kappa_hi > kInfiniteCurvature) j.kappa_hi = kInfinity;
    return j;
}

SpherePoint NormModel::sphere_point(double theta) const {
    SpherePoint sp;
    sp.theta = theta;
    sp.point = radial_point(theta);
    const detail::LocalJet j = local(sp.point);
    sp.support = (j.grad_lo + j.grad_hi) * 0.5;
    sp.smooth = norm2(j.grad_lo - j.grad_hi) <= kSmoothTol;
    const Vec2 t = rot90(sp.support);
    sp.tangent = t / gauge(t);
    sp.curvature = j.kappa_hi;
    sp.curvature_lo = j.kappa_lo;
    return sp;
}

void NormModel::build_local_table() const {
    std::call_once(cache_->local_once, [this] {
        const auto pts = cache();
        const std::size_t n = pts.size();
        auto& lo = cache_->normal_lo;
        auto& hi = cache_->normal_hi;
        lo.resize(n);
        hi.resize(n);
        double prev = 0.0;
        auto unwrap = [&](double a) {
            while (a < prev - kPi) a += kTwoPi;
            while (a > prev + kPi) a -= kTwoPi;
            return a;
        };
        for (std::size_t i = 0; i < n; ++i) {
            const detail::LocalJet j = local(pts[i]);
            cache_->dual_points.push_back(j.grad_lo);
            if (norm2(j.grad_hi - j.grad_lo) > 1e-12) cache_->dual_points.push_back(j.grad_hi);
            if (i == 0) prev = angle_of(j.grad_lo);
            lo[i] = unwrap(angle_of(j.grad_lo));
            prev = lo[i];
            hi[i] = unwrap(angle_of(j.grad_hi));
            prev = hi[i];
        }
    });
}

std::span<const Vec2> NormModel::dual_sphere() const {
    build_local_table();
    return cache_->dual_points;
}

detail::SupportFace NormModel::support_face(Vec2 u) const {
    if (auto f = impl_->support_face(u)) return *f;
    build_local_table();
    const auto& lo = cache_->normal_lo;
    const auto& hi = cache_->normal_hi;
    const auto pts = cache();
    const std::size_t n = pts.size();
    double a = angle_of(u);
    while (a < lo[0]) a += kTwoPi;
    while (a >= lo[0] + kTwoPi) a -= kTwoPi;
    // Last cache point whose normal does not pass a; the maximiser lies between it and the next.
    const std::size_t i = static_cast<std::size_t>(std::upper_bound(lo.begin(), lo.end(), a) - lo.begin()) - 1;
    constexpr double face_tol = 1e-12;
    if (std::abs(lo[i] - a) <= face_tol || std::abs(hi[i] - a) <= face_tol) {
        // Possibly a face: extend over neighbours sharing the normal.
        std::size_t first = i, last = i;
        auto same = [&](std::size_t k, double shift) {
            return std::abs(lo[k] + shift - a) <= face_tol && std::abs(hi[k] + shift - a) <= face_tol;
        };
        for (std::size_t s = 0; s < n / 2; ++s) {
            const std::size_t k = (first + n - 1) % n;
            if (!same(k, k > first ? -kTwoPi : 0.0)) break;
            first = k;
        }
        for (std::size_t s = 0; s < n / 2; ++s) {
            const std::size_t k = (last + 1) % n;
            if (!same(k, k < last ? kTwoPi : 0.0)) break;
            last = k;
        }
        if (first != last) return {pts[first], pts[last]};
        if (hi[i] >= a - face_tol) return {pts[i], pts[i]};
    }
    if (hi[i] >= a) return {pts[i], pts[i]};
    const double t0 = cache_angle(i);
    const double t1 = t0 + kTwoPi / static_cast<double>(n);
    const auto [t, v] = detail::maximize([&](double th) { return dot(u, radial_point(th)); }, t0, t1);
    Vec2 y = radial_point(t);
    if (dot(u, pts[i]) >= v) y = pts[i];
    if (dot(u, pts[(i + 1) % n]) >= std::max(v, dot(u, y))) y = pts[(i + 1) % n];
    return {y, y};
}

double NormModel::support_value(Vec2 f) const {
    const double r = norm2(f);
    if (r == 0.0) return 0.0;
    const Vec2 u = f / r;
    return r * dot(u, support_face(u).lo);
}

bool NormModel::is_c2() const { return impl_->c2(); }

std::vector<double> NormModel::feature_angles() const { return impl_->feature_angles(); }

void NormModel::validate() const {
    for (const Vec2& p : cache_->points) {
        if (!p.finite() || norm2(p) <= 0.0)
            throw Error(ErrorCode::NotConvex, label_ + ": gauge not positive and finite off the origin");
    }
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const Vec2 a{U(rng), U(rng)}, b{U(rng), U(rng)};
        const double ga = gauge(a), gb = gauge(b);
        if (gauge((a + b) * 0.5) > 0.5 * (ga + gb) + 1e-9)
            throw Error(ErrorCode::NotConvex, label_ + ": midpoint convexity fails");
        if (std::abs(gauge(-a) - ga) > 1e-12 * std::max(1.0, ga))
            throw Error(ErrorCode::NotSymmetric, label_ + ": gauge(-v) != gauge(v)");
    }
}

// ------------------------------------------------------------------ constructors

NormModel make_lp(double p) {
    if (!(p >= 1.0)) throw Error(ErrorCode::BadParameter, "l_p needs p >= 1");
    std::ostringstream label;
    if (std::isinf(p)) label << "l_inf";
    else label << "l_" << p;
    return NormModel(detail::lp_family(p), LpParams{p}, label.str());
}

NormModel make_euclidean() { return make_lp(2.0); }

NormModel make_polar(std::vector<Harmonic> harmonics) {
    for (const Harmonic& h : harmonics) {
        if (h.n < 0) throw Error(ErrorCode::BadParameter, "negative harmonic index");
        if (h.n % 2 != 0 && (h.cos_amp != 0.0 || h.sin_amp != 0.0))
            throw Error(ErrorCode::NotPeriodic, "odd harmonic " + std::to_string(h.n) + " breaks pi-periodicity");
    }
    for (int i = 0; i < 4096; ++i) {
        const auto j = detail::eval_harmonics(harmonics, kPi * i / 4096.0);
        if (!(j.g > 0.0)) throw Error(ErrorCode::BadParameter, "g must be positive");
        // Non-negative up to rounding: the curve r = 1 + sin(4 theta)/17 touches zero exactly.
        if (!(2.0 * j.gp * j.gp + j.g * j.g - j.g * j.gpp >= -1e-12))
            throw Error(ErrorCode::NotConvex, "2g'^2 + g^2 - g g'' < 0 at theta = " + std::to_string(kPi * i / 4096.0));
    }
    auto impl = detail::polar_family(harmonics);
    return NormModel(std::move(impl), PolarParams{std::move(harmonics)}, "polar");
}

NormModel make_grandpa_pig(double amplitude) {
    return make_polar({{0, 1.0, 0.0}, {4, 0.0, amplitude}});
}

NormModel make_quadrant_mix(double p, double q) {
    if (!(p > 1.0 && q > 1.0 && std::isfinite(p) && std::isfinite(q)))
        throw Error(ErrorCode::BadParameter, "quadrant mix needs 1 < p, q < inf");
    return NormModel(detail::quadrant_mix_family(p, q), QuadrantMixParams{p, q}, "quadrant_mix");
}

NormModel make_l2_l1_hybrid() {
    return NormModel(detail::quadrant_mix_family(2.0, 1.0), QuadrantMixParams{2.0, 1.0}, "l2_l1_hybrid");
}

NormModel make_polygon(std::vector<Vec2> vertices) {
    const std::size_t n = vertices.size();
    if (n < 4 || n % 2 != 0) throw Error(ErrorCode::BadParameter, "polygon needs an even number (>= 4) of vertices");
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (norm2(vertices[i] + vertices[i + n / 2]) > 1e-12)
            throw Error(ErrorCode::NotSymmetric, "polygon vertex list is not origin-symmetric");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = vertices[i], b = vertices[(i + 1) % n], c = vertices[(i + 2) % n];
        if (cross(b - a, c - b) <= 0.0) throw Error(ErrorCode::NotConvex, "polygon is not strictly convex and counterclockwise");
    }
    auto impl = detail::polygon_family(vertices);
    return NormModel(std::move(impl), PolygonParams{std::move(vertices)}, "polygon");
}

namespace {

void validate_chain(const std::vector<Arc>& arcs) {
    if (arcs.empty()) throw Error(ErrorCode::NotClosed, "empty arc chain");
    double turning = 0.0;
    for (const Arc& a : arcs) {
        if (!(a.radius > 0.0)) throw Error(ErrorCode::BadParameter, "arc radius must be positive");
        if (!(a.end_angle != a.start_angle)) throw Error(ErrorCode::BadParameter, "arc has zero angular extent");
        if (a.orientation != 1 || a.end_angle < a.start_angle)
            throw Error(ErrorCode::NotConvex, "arcs must all turn counterclockwise");
        turning += a.end_angle - a.start_angle;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        const Arc& b = arcs[(i + 1) % arcs.size()];
        if (norm2(a.end_point() - b.start_point()) > 1e-9)
            throw Error(ErrorCode::NotClosed, "arc " + std::to_string(i) + " does not end where the next begins");
        if (norm2(a.tangent_at(a.end_angle) - b.tangent_at(b.start_angle)) > 1e-9)
            throw Error(ErrorCode::TangentBreak, "tangent mismatch after arc " + std::to_string(i));
    }
    if (std::abs(turning - kTwoPi) > 1e-9) throw Error(ErrorCode::NotConvex, "total turning differs from 2 pi");
    std::vector<Vec2> samples;
    for (const Arc& a : arcs) {
        for (int k = 0; k < 16; ++k) samples.push_back(a.point_at(a.start_angle + (a.end_angle - a.start_angle) * k / 16.0));
    }
    double winding = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Vec2 p = samples[i], q = samples[(i + 1) % samples.size()];
        const double d = std::atan2(cross(p, q), dot(p, q));
        if (d < 0.0) throw Error(ErrorCode::NotConvex, "arc chain does not wind counterclockwise around the origin");
        winding += d;
    }
    if (std::abs(winding - kTwoPi) > 1e-6) throw Error(ErrorCode::NotConvex, "arc chain does not enclose the origin once");
}

void check_symmetric(const NormModel& m) {
    for (std::size_t i = 0; i < NormModel::kCacheSize / 2; ++i) {
        const Vec2 a = m.cache()[i], b = m.cache()[i + NormModel::kCacheSize / 2];
        if (norm2(a + b) > 1e-9) throw Error(ErrorCode::NotSymmetric, "arc chain is not origin-symmetric");
    }
}

}  // namespace

NormModel make_arc_chain(std::vector<Arc> arcs) {
    validate_chain(arcs);
    auto impl = detail::arc_chain_family(arcs);
    // Symmetry is checked on the cache before the random-pair validation can complain.
    NormModel m = [&] {
        try {
            return NormModel(impl, ArcChainParams{arcs}, "arc_chain");
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NotSymmetric) throw Error(ErrorCode::NotSymmetric, "arc chain is not origin-symmetric");
            throw;
        }
    }();
    check_symmetric(m);
    return m;
}

std::vector<Arc> reflect_quadrant_arcs(const std::vector<Arc>& q4) {
    std::vector<Arc> out;
    out.reserve(4 * q4.size());
    out.insert(out.end(), q4.begin(), q4.end());
    for (auto it = q4.rbegin(); it != q4.rend(); ++it) {  // across the horizontal axis
        out.push_back({{it->center.x, -it->center.y}, it->radius, -it->end_angle, -it->start_angle, 1});
    }
    for (const Arc& a : q4) {  // through the origin
        out.push_back({-a.center, a.radius, a.start_angle + kPi, a.end_angle + kPi, 1});
    }
    for (auto it = q4.rbegin(); it != q4.rend(); ++it) {  // across the vertical axis
        out.push_back({{-it->center.x, it->center.y}, it->radius, kPi - it->end_angle, kPi - it->start_angle, 1});
    }
    // Rotate so the chain starts in the first quadrant (start angles then increase monotonically).
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(q4.size()), out.end());
    return out;
}

namespace {

NormModel curve_norm_labeled(std::vector<Arc> quadrant_arcs, std::string label) {
    if (quadrant_arcs.empty()) throw Error(ErrorCode::NotClosed, "empty quadrant curve");
    const Vec2 s = quadrant_arcs.front().start_point(), e = quadrant_arcs.back().end_point();
    if (std::abs(s.x) > 1e-9 || !(s.y < 0.0) || std::abs(e.y) > 1e-9 || !(e.x > 0.0))
        throw Error(ErrorCode::NotClosed, "quadrant curve must run from the negative y-axis to the positive x-axis");
    auto full = reflect_quadrant_arcs(quadrant_arcs);
    validate_chain(full);
    auto impl = detail::arc_chain_family(std::move(full));
    NormModel m(std::move(impl), CurveNormParams{std::move(quadrant_arcs)}, std::move(label));
    check_symmetric(m);
    return m;
}

}  // namespace

NormModel make_curve_norm(std::vector<Arc> quadrant_arcs, std::string label) {
    return curve_norm_labeled(std::move(quadrant_arcs), std::move(label));
}

NormModel make_splicing(double R, double b_angle) {
    if (!(R > 1.0)) throw Error(ErrorCode::BadParameter, "splicing needs R > 1");
    const Vec2 a{0.0, R - 1.0};
    const Vec2 b = a + unit(b_angle) * R;
    if (!(b.x > 0.0 && b.y < 0.0 && b_angle > -kPi / 2 && b_angle < 0.0))
        throw Error(ErrorCode::BadParameter, "splicing point b must lie in the open fourth quadrant");
    const double s = a.y / (a.y - b.y);
    const Vec2 c{a.x + s * (b.x - a.x), 0.0};
    const double r2 = norm2(c - b);
    std::vector<Arc> arcs{{a, R, -kPi / 2, b_angle, 1}, {c, r2, b_angle, 0.0, 1}};
    return curve_norm_labeled(std::move(arcs), "splicing");
}

NormModel make_ellipse_intersection(Sym2 first, Sym2 second) {
    if (!first.positive_definite() || !second.positive_definite())
        throw Error(ErrorCode::NotPositiveDefinite, "ellipse forms must be positive definite");
    return NormModel(detail::ellipse_intersection_family(first, second), EllipseIntersectionParams{first, second},
                     "ellipse_intersection");
}

NormModel make_blend(const NormModel& base, double eps, double scale) {
    if (!(eps >= 0.0) || !(scale > 0.0)) throw Error(ErrorCode::BadParameter, "blend needs eps >= 0 and scale > 0");
    auto b = std::make_shared<const NormModel>(base);
    return NormModel(detail::blend_family(b, eps, scale), BlendParams{b, eps, scale}, "blend(" + base.label() + ")");
}

NormModel make_dual(const NormModel& model) {
    auto b = std::make_shared<const NormModel>(model);
    return NormModel(detail::dual_family(b), DualParams{b}, "dual(" + model.label() + ")");
}

}  // namespace semitrans
