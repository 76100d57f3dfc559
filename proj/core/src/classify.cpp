#include "semitrans/classify.hpp"

#include <algorithm>
#include <cmath>

#include "semitrans/error.hpp"
#include "semitrans/moduli.hpp"
#include "semitrans/semigroup.hpp"
#include "semitrans/tangency.hpp"

namespace semitrans {

std::string_view to_string(StKind k) {
    switch (k) {
        case StKind::Yes: return "Yes";
        case StKind::No: return "No";
        case StKind::Boundary: return "Boundary";
    }
    return "?";
}

std::string_view to_string(Side s) { return s == Side::Inner ? "inner" : "outer"; }

std::string_view to_string(BstKind k) {
    switch (k) {
        case BstKind::Yes: return "Yes";
        case BstKind::No: return "No";
        case BstKind::Unknown: return "Unknown";
    }
    return "?";
}

std::string_view to_string(UmstKind k) {
    switch (k) {
        case UmstKind::EligibleYes: return "EligibleYes";
        case UmstKind::No: return "No";
        case UmstKind::Unknown: return "Unknown";
    }
    return "?";
}

std::string_view to_string(PilgrimKind k) {
    switch (k) {
        case PilgrimKind::LikelyYes: return "LikelyYes";
        case PilgrimKind::LikelyNo: return "LikelyNo";
        case PilgrimKind::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

// Table points, then the family's feature angles.
std::vector<SpherePoint> sweep_points(const NormModel& model, std::size_t stride) {
    std::vector<SpherePoint> out;
    const auto table = model.table();
    for (std::size_t i = 0; i < table.size(); i += stride) out.push_back(table[i]);
    for (double t : model.feature_angles()) out.push_back(model.sphere_point(t));
    return out;
}

}  // namespace

StVerdict classify_st(const NormModel& model) {
    StVerdict v;
    v.min_inner_radius = kInfinity;
    for (const SpherePoint& x : sweep_points(model, 1)) {
        ++v.points_checked;
        const auto in = inner_disc(model, x);
        const auto out = outer_disc(model, x);
        if (in) v.min_inner_radius = std::min(v.min_inner_radius, in->radius);
        if (out) v.max_outer_radius = std::max(v.max_outer_radius, out->radius);
        if ((!in || !out) && v.kind != StKind::No) {
            v.kind = StKind::No;
            v.witness_theta = x.theta;
            v.missing = in ? Side::Outer : Side::Inner;
        }
    }
    // discs found, but within a factor 2 of the search limits
    if (v.kind == StKind::Yes && (v.min_inner_radius < 2.0 * kMinInnerRadius || v.max_outer_radius > kMaxOuterRadius / 2.0))
        v.kind = StKind::Boundary;
    return v;
}

double ellipse_ratio(const Sym2& e, const Sym2& f) {
    // largest mu with det(e - mu f) = 0
    const double qa = f.a * f.c - f.b * f.b;
    const double qb = -(e.a * f.c + f.a * e.c - 2.0 * e.b * f.b);
    const double qc = e.a * e.c - e.b * e.b;
    const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
    const double mu = (-qb + std::sqrt(disc)) / (2.0 * qa);
    return std::sqrt(std::max(mu, 0.0));
}

BstVerdict classify_bst(const NormModel& model, const StVerdict& st) {
    BstVerdict v;
    if (st.kind == StKind::No) {
        v.kind = BstKind::No;
        v.reason = "not semitransitive";
        return v;
    }
    v.power2_model = uc_curve(model).power2_coeff;
    v.power2_dual = uc_curve(make_dual(model)).power2_coeff;
    if (!v.power2_model || !v.power2_dual) {
        v.kind = BstKind::No;
        v.reason = !v.power2_model ? "modulus of convexity is not of power type 2"
                                   : "modulus of convexity of the dual is not of power type 2";
        return v;
    }
    double lambda = 0.0, kmin = kInfinity, kmax = 0.0;
    for (const SpherePoint& x : sweep_points(model, 4)) {
        kmin = std::min(kmin, x.curvature_lo);
        kmax = std::max(kmax, x.curvature);
        const auto e = inner_ellipse(model, x);
        const auto f = outer_ellipse(model, x);
        if (!e || !f) {
            v.kind = BstKind::Unknown;
            v.reason = "ellipse construction failed at a point with discs";
            v.worst_theta = x.theta;
            return v;
        }
        const double l = ellipse_ratio(e->M, f->M);
        if (l > lambda) lambda = l, v.worst_theta = x.theta;
    }
    v.lambda = lambda;
    if (lambda <= kBstRatioLimit) {
        v.kind = BstKind::Yes;
    } else if (kmin < 1e-4 * kmax) {
        v.kind = BstKind::No;
        v.reason = "outer/inner ellipse ratio grows as the curvature tends to 0";
    } else {
        v.kind = BstKind::Unknown;
        v.reason = "ellipse ratio large at sweep resolution";
    }
    return v;
}

BstVerdict classify_bst(const NormModel& model) { return classify_bst(model, classify_st(model)); }

std::vector<FlatInterval> find_flat(const NormModel& model) {
    const auto pts = model.cache();
    const std::size_t n = pts.size();
    std::vector<detail::LocalJet> jets(n);
    for (std::size_t i = 0; i < n; ++i) jets[i] = model.local(pts[i]);
    // same[i]: p_i and p_{i+1} share a supporting line
    std::vector<char> same(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const Vec2 g = jets[i].grad_hi;
        same[i] = norm2(g - jets[j].grad_lo) <= 1e-9 * norm2(g) && std::abs(dot(g, pts[j]) - 1.0) <= 1e-9;
    }
    // a run continues while consecutive pairs share the same line
    auto joins = [&](std::size_t i) {
        const std::size_t h = (i + n - 1) % n;
        return same[i] && same[h] && norm2(jets[i].grad_hi - jets[h].grad_hi) <= 1e-9 * norm2(jets[i].grad_hi);
    };
    std::vector<FlatInterval> out;
    std::size_t start = 0;
    while (start < n && joins(start)) ++start;
    if (start == n) return out;  // one line all round cannot happen for a norm
    for (std::size_t k = 0; k < n;) {
        const std::size_t i = (start + k) % n;
        if (!same[i]) {
            ++k;
            continue;
        }
        std::size_t len = 1;
        while (len < n - k && joins((i + len) % n)) ++len;
        const double lo = wrap_angle(NormModel::cache_angle(i));
        out.push_back({lo, lo + NormModel::cache_angle(len)});
        k += len;
    }
    return out;
}

namespace {

bool contractive_pair(const NormModel& model, const SpherePoint& a, const SpherePoint& b, double eps) {
    try {
        return is_contraction(model, make_L_ab(model, a, b, eps));
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

std::vector<UmstRow> umst_delta_table(const NormModel& model, const std::vector<double>& eps_list) {
    constexpr int kAPoints = 256, kMagnitudes = 16;
    // 16 offset magnitudes from 1e-3 to 0.3 radians, taken with both signs
    std::vector<double> mags(kMagnitudes);
    for (int j = 0; j < kMagnitudes; ++j) mags[j] = 1e-3 * std::pow(300.0, j / (kMagnitudes - 1.0));
    struct Ray {
        SpherePoint a;
        std::vector<SpherePoint> b;
        std::vector<double> d;
    };
    std::vector<Ray> rays;
    for (int i = 0; i < kAPoints; ++i) {
        const double t = kTwoPi * i / kAPoints;
        for (double sign : {1.0, -1.0}) {
            Ray r{model.sphere_point(t), {}, {}};
            for (double m : mags) {
                r.b.push_back(model.sphere_point(t + sign * m));
                r.d.push_back(model.gauge(r.a.point - r.b.back().point));
            }
            rays.push_back(std::move(r));
        }
    }
    std::vector<UmstRow> rows;
    for (double eps : eps_list) {
        double fail = kInfinity;
        std::vector<int> last_pass(rays.size(), -2);  // -2: not examined
        for (std::size_t k = 0; k < rays.size(); ++k) {
            const Ray& r = rays[k];
            if (r.d.front() >= fail) continue;
            // first failing offset, assuming failures persist outward along a ray
            int lo = -1, hi = kMagnitudes;
            while (hi - lo > 1) {
                const int mid = (lo + hi) / 2;
                (contractive_pair(model, r.a, r.b[mid], eps) ? lo : hi) = mid;
            }
            last_pass[k] = lo;
            if (hi < kMagnitudes) fail = std::min(fail, r.d[hi]);
        }
        // largest certified distance below the first failure
        double delta = 0.0;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            for (int j = last_pass[k]; j >= 0; --j) {
                if (rays[k].d[j] < fail) {
                    delta = std::max(delta, rays[k].d[j]);
                    break;
                }
            }
        }
        rows.push_back({eps, delta});
    }
    return rows;
}

UmstVerdict classify_umst(const NormModel& model) {
    UmstVerdict v;
    double kmin = kInfinity, at = 0.0;
    for (const SpherePoint& x : sweep_points(model, 1)) {
        if (x.curvature_lo < kmin) kmin = x.curvature_lo, at = x.theta;
    }
    v.kappa_min = kmin;
    if (!(kmin > kKappaFloor)) {
        v.kind = UmstKind::No;
        v.reason = "curvature vanishes at theta = " + std::to_string(at);
        return v;
    }
    v.table = umst_delta_table(model);
    if (!model.is_c2()) {
        v.kind = UmstKind::Unknown;
        v.reason = "sphere is not C2; empirical table only";
        return v;
    }
    v.kind = UmstKind::EligibleYes;
    return v;
}

PilgrimResult pilgrim_probe(const NormModel& model, const SpherePoint& x, std::size_t grid) {
    PilgrimResult r;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < grid; ++i) {
        const SpherePoint y = model.sphere_point(kTwoPi * static_cast<double>(i) / static_cast<double>(grid));
        bool ok = norm2(y.point - x.point) < 1e-12;
        if (!ok) {
            try {
                ok = orbit_map(model, x, y).has_value();
            } catch (const Error&) {
                ok = false;
            }
        }
        if (ok) ++hits;
        else r.blocked.push_back(y.theta);
    }
    r.fraction = static_cast<double>(hits) / static_cast<double>(grid);
    r.kind = r.fraction >= 0.99 ? PilgrimKind::LikelyYes : PilgrimKind::LikelyNo;
    return r;
}

Verdict classify(const NormModel& model, const ClassifyOptions& options) {
    Verdict v;
    v.st = classify_st(model);
    v.bst = classify_bst(model, v.st);
    v.umst = classify_umst(model);
    v.flat_points = find_flat(model);
    if (options.pilgrim) v.pilgrim_dense = pilgrim_probe(model, model.sphere_point(0.3)).kind;
    if (options.dual_check) {
        const StVerdict d = classify_st(make_dual(model));
        v.dual_st_agrees = (d.kind == StKind::No) == (v.st.kind == StKind::No);
    }
    return v;
}

std::vector<GalleryEntry> gallery() {
    const double h = kPi / 3.0;
    std::vector<Vec2> hexagon;
    for (int k = 0; k < 6; ++k) hexagon.push_back(unit(h * k));
    std::vector<GalleryEntry> g;
    g.push_back({"euclidean", make_euclidean(), true});
    g.push_back({"l1", make_lp(1.0), false});
    g.push_back({"l1.5", make_lp(1.5), true});
    g.push_back({"l4", make_lp(4.0), true});
    g.push_back({"l_inf", make_lp(kInfinity), false});
    g.push_back({"grandpa_pig", make_grandpa_pig(), true});
    g.push_back({"quadrant_mix", make_quadrant_mix(1.5, 4.0), true});
    g.push_back({"l2_l1_hybrid", make_l2_l1_hybrid(), false});
    g.push_back({"splicing", make_splicing(), true});
    g.push_back({"ellipse_intersection", make_ellipse_intersection({1.0, 0.0, 0.25}, {0.25, 0.0, 1.0}), false});
    g.push_back({"blend_l4", make_blend(make_lp(4.0), 1.0), true});
    g.push_back({"hexagon", make_polygon(hexagon), false});
    return g;
}

}  // namespace semitrans
