#include "semitrans/tools/reproduce.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "semitrans/classify.hpp"
#include "semitrans/curvature.hpp"
#include "semitrans/curve_builder.hpp"
#include "semitrans/geometry_core.hpp"
#include "semitrans/moduli.hpp"
#include "semitrans/semigroup.hpp"
#include "semitrans/tangency.hpp"

namespace semitrans::tools {

namespace {

std::string str(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// largest column sum: the l1 operator norm
double l1_norm(const LinearMap2& T) {
    return std::max(std::abs(T.m11) + std::abs(T.m21), std::abs(T.m12) + std::abs(T.m22));
}

std::vector<Check> figure1() {
    std::vector<Check> out;
    const auto l1 = make_lp(1.0);
    const LinearMap2 T1{0.5, 0.0, 0.5, 1.0};
    // one third of [[3, 1], [0, 2]], applied after the integer matrix so the image stays exact
    const LinearMap2 N2{3.0, 1.0, 0.0, 2.0};
    const Vec2 a{0.5, 0.5}, b{0.25, 0.75};
    const Vec2 t1a = T1(a);
    const Vec2 n2b = N2(b) / 3.0;
    out.push_back({"T1 maps (1/2,1/2) to (1/4,3/4) exactly", t1a == b, "(" + str(t1a.x) + ", " + str(t1a.y) + ")"});
    out.push_back({"T2 maps (1/4,3/4) to (1/2,1/2) exactly", n2b == a, "(" + str(n2b.x) + ", " + str(n2b.y) + ")"});
    const LinearMap2 T2{1.0, 1.0 / 3.0, 0.0, 2.0 / 3.0};
    for (const auto& [name, T] : {std::pair{"T1", T1}, std::pair{"T2", T2}}) {
        const double num = operator_norm(l1, T).value;
        out.push_back({std::string(name) + " has l1 operator norm 1", std::abs(num - 1.0) <= 1e-9 && std::abs(l1_norm(T) - 1.0) <= 1e-15,
                       "numeric " + str(num) + ", column sums " + str(l1_norm(T))});
        const auto c = certify(l1, T);
        out.push_back({std::string(name) + " is a contractive automorphism", c.is_contractive && T.invertible(),
                       "inverse norm " + str(c.inv_norm)});
    }
    return out;
}

std::vector<Check> l1_orbits() {
    std::vector<Check> out;
    const auto l1 = make_lp(1.0);
    bool vertices = true;
    for (int k = 0; k < 4; ++k) vertices = vertices && l1_orbit(l1, l1.sphere_point(kPi / 2 * k)).reachable == Reach::AllSphere;
    out.push_back({"orbit of each vertex is the whole sphere", vertices, ""});
    for (Vec2 x : {Vec2{0.5, 0.5}, Vec2{0.3, 0.7}, Vec2{-0.8, 0.2}}) {
        const auto r = l1_orbit(l1, l1.sphere_point_at(x));
        bool exact = true;
        for (const auto& w : r.witnesses) exact = exact && w.certificate.is_contractive && l1.gauge(w.certificate.T(r.x.point) - w.y.point) < 1e-9;
        out.push_back({"orbit of (" + str(x.x) + ", " + str(x.y) + ") is the sphere minus the 4 vertices",
                       r.reachable == Reach::AllButSet && r.excluded.size() == 4 && exact,
                       std::to_string(r.witnesses.size()) + " certified witnesses"});
    }
    const auto p = pilgrim_probe(l1, l1.sphere_point(kPi / 4));
    out.push_back({"(1/2,1/2) reaches all grid targets but the vertices", p.kind == PilgrimKind::LikelyYes && p.blocked.size() >= 4,
                   "fraction " + str(p.fraction)});
    // the orbit is a neighbourhood of x
    bool nbhd = true;
    for (double t : {0.3, 1.0, 2.0, 4.5}) {
        const SpherePoint x = l1.sphere_point(t);
        for (double d : {-1e-3, 1e-3}) nbhd = nbhd && orbit_map(l1, x, l1.sphere_point(t + d)).has_value();
    }
    out.push_back({"orbits contain nearby points", nbhd, ""});
    return out;
}

std::vector<Check> quadrant_mix() {
    std::vector<Check> out;
    const auto qm = make_quadrant_mix(1.5, 4.0);
    const auto st = classify_st(qm);
    out.push_back({"quadrant mix (1.5, 4) is not semitransitive", st.kind == StKind::No,
                   st.witness_theta ? "witness theta " + str(*st.witness_theta) : ""});
    const SpherePoint e1 = qm.sphere_point(0.0);
    out.push_back({"e1 has neither an inner nor an outer disc", !inner_disc(qm, e1) && !outer_disc(qm, e1), ""});
    for (double t : {0.4, 2.0, 5.1}) {
        const SpherePoint y = qm.sphere_point(t);
        out.push_back({"no contraction between e1 and theta = " + str(t), !orbit_map(qm, e1, y) && !orbit_map(qm, y, e1), ""});
    }
    const auto p = pilgrim_probe(qm, e1);
    out.push_back({"orbit of e1 is not dense", p.kind == PilgrimKind::LikelyNo, "fraction " + str(p.fraction)});
    return out;
}

std::vector<Check> grandpa_pig() {
    std::vector<Check> out;
    const auto gp = make_grandpa_pig();
    const auto prof = profile(gp, NormModel::kTableSize);
    // oracle straight from g
    double oracle = kInfinity, convex = kInfinity;
    for (int i = 0; i < 4096; ++i) {
        const double t = kTwoPi * i / 4096, a = 1.0 / 17.0;
        const double g = 1 + a * std::sin(4 * t), gp1 = 4 * a * std::cos(4 * t), gp2 = -16 * a * std::sin(4 * t);
        convex = std::min(convex, 2 * gp1 * gp1 + g * g - g * gp2);
        oracle = std::min(oracle, (2 * gp1 * gp1 + g * g - g * gp2) / std::pow(g * g + gp1 * gp1, 1.5));
    }
    out.push_back({"2g'^2 + g^2 - g g'' positive on a 4096 grid", convex > 0.0, "minimum " + str(convex)});
    out.push_back({"minimum curvature above 0.5", prof.kappa_min > 0.5, "profile " + str(prof.kappa_min) + ", oracle " + str(oracle)});
    out.push_back({"profile matches the polar oracle", std::abs(prof.kappa_min - oracle) < 1e-6, ""});
    const auto rows = umst_delta_table(gp);
    for (const auto& r : rows) out.push_back({"UMST delta positive at eps = " + str(r.eps), r.delta > 0.0, "delta " + str(r.delta)});
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-1.0, 1.0), A(0.0, kTwoPi);
    const auto curve = uc_curve(gp);
    int held = 0;
    for (int i = 0; i < 1000; ++i) {
        Vec2 z{U(rng), U(rng)};
        z = z * (std::abs(U(rng)) / gp.gauge(z));
        held += decomposition_check(curve, gp, gp.sphere_point(A(rng)), z).holds;
    }
    out.push_back({"decomposition inequality on 1000 ball points", held == 1000, std::to_string(held) + "/1000"});
    return out;
}

std::vector<Check> splicing() {
    std::vector<Check> out;
    const auto m = make_splicing();
    const auto st = classify_st(m);
    out.push_back({"every sphere point has inner and outer discs", st.kind == StKind::Yes,
                   std::to_string(st.points_checked) + " points"});
    const auto prof = profile(m, NormModel::kTableSize);
    out.push_back({"curvatures are 1/R and 1/R' with R' < R", std::abs(prof.kappa_min - 0.5) < 1e-9 && prof.kappa_max > 0.5,
                   "kappa in [" + str(prof.kappa_min) + ", " + str(prof.kappa_max) + "]"});
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> A(0.0, kTwoPi);
    int ok = 0;
    for (int i = 0; i < 20; ++i) ok += orbit_map(m, m.sphere_point(A(rng)), m.sphere_point(A(rng))).has_value();
    out.push_back({"contractions between 20 random pairs", ok == 20, std::to_string(ok) + "/20"});
    return out;
}

std::vector<Check> nobst() {
    std::vector<Check> out;
    const auto curve = integrate_curve(staircase());
    out.push_back({"K(1) = 5/6", std::abs(curve.end_angle - 5.0 / 6.0) < 1e-6, str(curve.end_angle)});
    bool bounds = true;
    for (int i = 1; i <= 1000; ++i) {
        const double s = i / 1000.0, K = curve.angle_at(s);
        bounds = bounds && K <= s + 1e-12 && K >= 0.6 * s - 1e-12;
    }
    out.push_back({"3s/5 <= K(s) <= s", bounds, ""});
    double far = 0.0;
    for (const auto& q : curve.samples) far = std::max(far, norm2(q.point - Vec2{0.0, -1.0}));
    out.push_back({"curve stays within 5/3 of (0,-1)", far <= 5.0 / 3.0 + 1e-6, "max distance " + str(far)});
    const auto m = close_sphere(curve, "nobst");
    const auto st = classify_st(m);
    out.push_back({"closed sphere is semitransitive", st.kind == StKind::Yes, std::string(to_string(st.kind))});
    const auto w = nobst_witness(m, curve, {1, 2, 3, 4, 5, 6, 7, 8});
    bool grows = true;
    std::string ratios;
    for (std::size_t i = 1; i < w.size(); ++i) {
        const double r = w[i].bound / w[i - 1].bound;
        grows = grows && r >= 1.3 && r <= 1.6;
        ratios += (i > 1 ? " " : "") + str(r);
    }
    out.push_back({"inverse-norm bounds grow by about sqrt 2", grows, ratios});
    out.push_back({"not boundedly semitransitive", classify_bst(m, st).kind == BstKind::No, ""});
    return out;
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
    static const std::vector<std::string> t{"figure1", "l1-orbits", "quadrant-mix", "grandpa-pig", "splicing", "nobst"};
    return t;
}

std::vector<Check> reproduce(const std::string& target) {
    if (target == "figure1") return figure1();
    if (target == "l1-orbits") return l1_orbits();
    if (target == "quadrant-mix") return quadrant_mix();
    if (target == "grandpa-pig") return grandpa_pig();
    if (target == "splicing") return splicing();
    if (target == "nobst") return nobst();
    throw std::invalid_argument("unknown reproduce target: " + target);
}

}  // namespace semitrans::tools
