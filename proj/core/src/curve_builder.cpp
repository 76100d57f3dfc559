#include "semitrans/curve_builder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "numeric.hpp"
#include "semitrans/error.hpp"
#include "semitrans/semigroup.hpp"

namespace semitrans {

double CurvatureFunction::operator()(double s) const {
    if (!(s >= lo - 1e-15 && s <= hi + 1e-15)) throw Error(ErrorCode::OutOfDomain, "arc length outside the curve domain");
    for (const Piece& p : pieces) {
        if (s >= p.lo && s <= p.hi) return p.value;
    }
    return 1.0;
}

double k_staircase(double s, int n_max) {
    if (!(s >= -kPi / 2.0 && s <= 1.0)) throw Error(ErrorCode::OutOfDomain, "staircase is defined on [-pi/2, 1]");
    for (int n = 1; n <= n_max; ++n) {
        const double a = std::ldexp(1.0, -n);
        if (s >= a && s <= a + std::ldexp(1.0, -n - 2)) return a;
    }
    return 1.0;
}

CurvatureFunction staircase(int n_max) {
    if (n_max < 1) throw Error(ErrorCode::BadParameter, "staircase depth must be positive");
    CurvatureFunction k;
    for (int n = n_max; n >= 1; --n) {
        const double a = std::ldexp(1.0, -n);
        k.pieces.push_back({a, a + std::ldexp(1.0, -n - 2), a});
    }
    return k;
}

namespace {

struct Run {
    double s0, s1, k;
};

// Constant-curvature runs covering [0, hi].
std::vector<Run> runs(const CurvatureFunction& k) {
    std::vector<Run> out;
    double s = 0.0;
    for (const auto& p : k.pieces) {
        if (p.lo > s) out.push_back({s, p.lo, 1.0});
        out.push_back({p.lo, p.hi, p.value});
        s = p.hi;
    }
    if (k.hi > s) out.push_back({s, k.hi, 1.0});
    return out;
}

Vec2 advance(Vec2 p, double K, double k, double ds) {
    return p + Vec2{std::sin(K + k * ds) - std::sin(K), std::cos(K) - std::cos(K + k * ds)} / k;
}

// Outward-pointing unit radius for tangent angle K on a counterclockwise curve.
Vec2 radial(double K) { return {std::sin(K), -std::cos(K)}; }

}  // namespace

BuiltCurve integrate_curve(const CurvatureFunction& k, double step) {
    if (!(step > 0.0 && step <= 1e-4)) throw Error(ErrorCode::BadParameter, "integration step must be in (0, 1e-4]");
    for (const auto& p : k.pieces) {
        if (!(p.value > 0.0 && p.value <= 1.0 && p.lo < p.hi && p.lo >= 0.0 && p.hi <= k.hi))
            throw Error(ErrorCode::BadParameter, "curvature pieces must lie in [0, hi] with values in (0, 1]");
    }
    BuiltCurve c;
    c.k = k;
    const int nq = static_cast<int>(std::ceil(kPi / 2.0 / step));
    for (int i = 0; i < nq; ++i) {
        const double s = -kPi / 2.0 + (kPi / 2.0) * i / nq;
        c.samples.push_back({s, {std::sin(s), -std::cos(s)}, s});
    }
    Vec2 p{0.0, -1.0};
    double K = 0.0;
    c.samples.push_back({0.0, p, K});
    for (const Run& r : runs(k)) {
        const int m = std::max(1, static_cast<int>(std::ceil((r.s1 - r.s0) / step)));
        const double h = (r.s1 - r.s0) / m;
        for (int i = 0; i < m; ++i) {
            // k is constant on the run so Simpson on k is exact; Simpson on (cos K, sin K)
            const double Km = K + r.k * h / 2.0;
            const double K1 = K + r.k * h;
            p = p + Vec2{std::cos(K) + 4.0 * std::cos(Km) + std::cos(K1), std::sin(K) + 4.0 * std::sin(Km) + std::sin(K1)} * (h / 6.0);
            K = K1;
            c.samples.push_back({r.s0 + h * (i + 1), p, K});
        }
    }
    c.endpoint = p;
    c.end_angle = K;
    return c;
}

Vec2 BuiltCurve::at(double s) const {
    auto it = std::upper_bound(samples.begin(), samples.end(), s, [](double v, const CurveSample& q) { return v < q.s; });
    if (it != samples.begin()) --it;
    const double ds = s - it->s;
    if (ds == 0.0) return it->point;
    return advance(it->point, it->K, it->s < 0.0 ? 1.0 : k(std::min(it->s + ds / 2.0, k.hi)), ds);
}

double BuiltCurve::angle_at(double s) const {
    auto it = std::upper_bound(samples.begin(), samples.end(), s, [](double v, const CurveSample& q) { return v < q.s; });
    if (it != samples.begin()) --it;
    const double ds = s - it->s;
    return it->K + (it->s < 0.0 ? 1.0 : k(std::min(it->s + ds / 2.0, k.hi))) * ds;
}

namespace {

// Exact arcs of the curve from (0,-1) to its end.
std::vector<Arc> curve_arcs(const CurvatureFunction& k, Vec2& end, double& K) {
    std::vector<Arc> arcs;
    Vec2 p{0.0, -1.0};
    K = 0.0;
    for (const Run& r : runs(k)) {
        const double R = 1.0 / r.k;
        const double K1 = K + r.k * (r.s1 - r.s0);
        arcs.push_back({p - radial(K) * R, R, K - kPi / 2.0, K1 - kPi / 2.0, 1});
        p = advance(p, K, r.k, r.s1 - r.s0);
        K = K1;
    }
    end = p;
    return arcs;
}

}  // namespace

ClosingCircles closing_circles(const BuiltCurve& curve) {
    Vec2 p;
    double Kp = 0.0;
    curve_arcs(curve.k, p, Kp);
    ClosingCircles out;
    if (!(Kp > 0.0 && Kp < kPi / 2.0))
        throw Error(ErrorCode::TangencySolveFailed, "end tangent must have positive finite slope");
    out.a = p.x - p.y * std::cos(Kp) / std::sin(Kp);
    if (!(out.a > 1.0)) throw Error(ErrorCode::TangencySolveFailed, "end tangent meets the axis at a <= 1");
    // q = p + R (radial(al) - radial(Kp)) = (1,0) + R' (radial(al) - radial(pi/2)): linear in (R, R').
    const Vec2 d = Vec2{1.0, 0.0} - p;
    auto radii = [&](double al, double& R, double& Rp) {
        const Vec2 a = radial(al) - radial(Kp), b = radial(kPi / 2.0) - radial(al);
        const double det = cross(a, b);
        if (std::abs(det) < 1e-300) return false;
        R = cross(d, b) / det;
        Rp = cross(a, d) / det;
        return R > 0.0 && Rp > 0.0;
    };
    // The pair is a one-parameter family; take the most balanced radii.
    auto cost = [&](double al) {
        double R, Rp;
        return radii(al, R, Rp) ? std::abs(std::log(R / Rp)) : kInfinity;
    };
    constexpr int kScan = 400;
    const double h = (kPi / 2.0 - Kp) / kScan;
    int best = -1;
    double best_cost = kInfinity;
    for (int i = 1; i < kScan; ++i) {
        const double c = cost(Kp + h * i);
        if (c < best_cost) best_cost = c, best = i;
    }
    if (best < 0) throw Error(ErrorCode::TangencySolveFailed, "no closing circle pair with positive radii");
    const double al = detail::minimize(cost, Kp + h * (best - 1), Kp + h * (best + 1)).first;
    double R, Rp;
    if (!radii(al, R, Rp)) throw Error(ErrorCode::TangencySolveFailed, "closing circles degenerate");
    out.alpha = al;
    out.c = {p - radial(Kp) * R, R, Kp - kPi / 2.0, al - kPi / 2.0, 1};
    out.c_prime = {{1.0 - Rp, 0.0}, Rp, al - kPi / 2.0, 0.0, 1};
    const Vec2 q1 = out.c.end_point(), q2 = out.c_prime.start_point();
    out.residual = std::max({norm2(q1 - q2), std::abs(norm2(out.c.center - out.c_prime.center) - std::abs(R - Rp)),
                             norm2(out.c.start_point() - p)});
    if (out.residual > 1e-9) {
        std::ostringstream os;
        os << "closing circles residual " << out.residual;
        throw Error(ErrorCode::TangencySolveFailed, os.str());
    }
    return out;
}

NormModel close_sphere(const BuiltCurve& curve, std::string label) {
    Vec2 p;
    double Kp = 0.0;
    auto arcs = curve_arcs(curve.k, p, Kp);
    if (norm2(p - Vec2{1.0, 0.0}) < 1e-12 && std::abs(Kp - kPi / 2.0) < 1e-12) return make_curve_norm(std::move(arcs), std::move(label));
    const ClosingCircles cc = closing_circles(curve);
    for (const Arc& a : {cc.c, cc.c_prime}) {
        if (a.end_angle - a.start_angle > 1e-12) arcs.push_back(a);
    }
    // pin the last junction exactly on the axis
    arcs.back().center.y = 0.0;
    return make_curve_norm(std::move(arcs), std::move(label));
}

NormModel build_nobst(int n_max) { return close_sphere(integrate_curve(staircase(n_max)), "nobst"); }

std::vector<NobstWitness> nobst_witness(const NormModel& model, const BuiltCurve& curve, const std::vector<int>& n_list) {
    const SpherePoint y = model.sphere_point(angle_of(curve.at(0.8)));
    std::vector<NobstWitness> out;
    for (int n : n_list) {
        if (n < 0) throw Error(ErrorCode::BadParameter, "witness index must be non-negative");
        // middle of the flat arc of curvature 2^-n; n = 0 reuses the curvature 1 arc
        const double s = n == 0 ? 0.8 : std::ldexp(1.0, -n) + std::ldexp(1.0, -n - 3);
        const SpherePoint x = model.sphere_point(angle_of(curve.at(s)));
        out.push_back({n, inv_norm_lower_bound(model, x, y)});
    }
    return out;
}

std::string curve_csv(const BuiltCurve& curve) {
    std::ostringstream os;
    os.precision(17);
    os << "s,x,y,K\n";
    for (const auto& q : curve.samples) os << q.s << ',' << q.point.x << ',' << q.point.y << ',' << q.K << '\n';
    return os.str();
}

}  // namespace semitrans
