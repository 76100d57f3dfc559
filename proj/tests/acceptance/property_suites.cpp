#include <algorithm>
#include <cmath>
#include <random>

#include "acceptance.hpp"
#include "semitrans/classify.hpp"
#include "semitrans/curve_builder.hpp"
#include "semitrans/geometry_core.hpp"
#include "semitrans/moduli.hpp"
#include "semitrans/semigroup.hpp"

using namespace semitrans;

namespace acceptance {

Outcome lab_norm_estimates() {
    Outcome o;
    const LinearMap2 I = LinearMap2::identity();
    for (const NormModel& m : {make_euclidean(), make_grandpa_pig(), make_blend(make_lp(4.0), 1.0)}) {
        double norm_err = 0.0, excess = -kInfinity, C = 0.0;
        for (int i = 0; i < 64; ++i) {
            const SpherePoint a = m.sphere_point(kTwoPi * i / 64);
            for (int k = 1; k <= 9; ++k) {
                const double eps = 0.1 * k;
                const LinearMap2 L = make_L_ab(m, a, a, eps);
                norm_err = std::max(norm_err, std::abs(operator_norm(m, L).value - 1.0));
                excess = std::max(excess, operator_norm(m, L - I).value - 2.0 * eps);
            }
        }
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> angle(0.0, kTwoPi), step(-0.5, 0.5), E(0.0, 0.9);
        for (int s = 0; s < 10000; ++s) {
            const double t = angle(rng);
            // half the pairs close together, where the bound is tight
            const double d = s % 2 ? step(rng) : step(rng) * 1e-3;
            const SpherePoint a = m.sphere_point(t), b = m.sphere_point(t + d);
            const double eps = s % 3 ? E(rng) : E(rng) * 1e-3;
            const double dist = m.gauge(a.point - b.point) + eps;
            if (dist == 0.0) continue;
            C = std::max(C, operator_norm(m, make_L_ab(m, a, b, eps) - I).value / dist);
        }
        o.require(norm_err <= 1e-6, m.label() + ": |L^aa| off by " + str(norm_err));
        o.require(excess <= 1e-6, m.label() + ": |L^aa - I| exceeds 2 eps by " + str(excess));
        o.require(std::isfinite(C), m.label() + ": no finite constant");
        o.note(m.label() + " C = " + str(C));
    }
    return o;
}

Outcome nobst_build() {
    Outcome o;
    const auto curve = integrate_curve(staircase());
    // K(1) = 1 - sum over the steps of (1 - 2^-n) 2^-n-2
    double series = 1.0;
    for (int n = 1; n <= kStaircaseDepth; ++n) series -= (1.0 - std::ldexp(1.0, -n)) * std::ldexp(1.0, -n - 2);
    o.require(std::abs(curve.end_angle - 5.0 / 6.0) <= 1e-6, "K(1) = " + str(curve.end_angle));
    o.require(std::abs(curve.end_angle - series) <= 1e-9, "K(1) disagrees with the series " + str(series));
    int bad = 0;
    for (int i = 1; i <= 1000; ++i) {
        const double s = i / 1000.0, K = curve.angle_at(s);
        bad += !(0.6 * s <= K + 1e-12 && K <= s + 1e-12);
    }
    o.require(bad == 0, std::to_string(bad) + " points break 3s/5 <= K <= s");
    double far = 0.0;
    for (const auto& q : curve.samples) far = std::max(far, norm2(q.point - Vec2{0.0, -1.0}));
    o.require(far <= 5.0 / 3.0 + 1e-6, "sample at distance " + str(far));
    const NormModel m = close_sphere(curve, "nobst");  // throws if convexity validation fails
    const auto st = classify_st(m);
    o.require(st.kind == StKind::Yes, "st = " + std::string(to_string(st.kind)));
    const auto w = nobst_witness(m, curve, {1, 2, 3, 4, 5, 6, 7, 8});
    for (std::size_t i = 1; i < w.size(); ++i) {
        const double r = w[i].bound / w[i - 1].bound;
        o.require(r >= 1.3 && r <= 1.6, "ratio " + str(r) + " at n = " + std::to_string(w[i].n));
    }
    o.note("K(1) = " + str(curve.end_angle) + ", bound(8) = " + str(w.back().bound));
    return o;
}

Outcome duality() {
    Outcome o;
    int n = 0;
    for (const auto& g : gallery()) {
        const auto a = classify_st(g.model).kind, b = classify_st(make_dual(g.model)).kind;
        o.require(a == b, g.name + ": " + std::string(to_string(a)) + " vs dual " + std::string(to_string(b)));
        ++n;
    }
    o.require(n >= 8, "fewer than 8 models");
    o.note(std::to_string(n) + " models");
    return o;
}

Outcome decomposition() {
    Outcome o;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int models = 0;
    for (const auto& g : gallery()) {
        if (!g.smooth) continue;
        ++models;
        const auto curve = uc_curve(g.model);
        double worst = -kInfinity;
        for (int i = 0; i < 1000; ++i) {
            const Vec2 z = g.model.radial_point(kTwoPi * U(rng)) * std::sqrt(U(rng));
            const auto d = decomposition_check(curve, g.model, g.model.sphere_point(kTwoPi * U(rng)), z);
            worst = std::max(worst, d.t * d.t + d.delta_hat);
        }
        o.require(worst <= 1.0 + 1e-4, g.name + ": t^2 + delta = " + str(worst));
    }
    o.note(std::to_string(models) + " smooth models");
    return o;
}

Outcome implication_chain() {
    Outcome o;
    auto models = gallery();
    models.push_back({"nobst", build_nobst(), true});
    for (const auto& g : models) {
        const Verdict v = classify(g.model, {false, false});
        const bool umst = v.umst.kind == UmstKind::EligibleYes;
        const bool bst = v.bst.kind == BstKind::Yes;
        o.require(!(umst && v.bst.kind == BstKind::No), g.name + ": UMST without BST");
        o.require(!(bst && v.st.kind == StKind::No), g.name + ": BST without ST");
        o.require(!(umst && v.st.kind == StKind::No), g.name + ": UMST without ST");
        o.note(g.name + " " + std::string(to_string(v.st.kind)) + "/" + std::string(to_string(v.bst.kind)) + "/" +
               std::string(to_string(v.umst.kind)));
    }
    return o;
}

}  // namespace acceptance
