#include <doctest.h>

#include <cmath>
#include <random>

#include "semitrans/curvature.hpp"
#include "semitrans/error.hpp"
#include "semitrans/tangency.hpp"

using namespace semitrans;

namespace {

NormModel ellipse_model(double ax, double ay) {
    const Sym2 m{1.0 / (ax * ax), 0.0, 1.0 / (ay * ay)};
    return make_ellipse_intersection(m, m);
}

// Every sphere point is inside the disc (outer) or no sphere point is inside it (inner).
bool disc_inside(const NormModel& m, const Disc& d) {
    for (int i = 0; i < 2000; ++i) {
        if (m.gauge(d.center + unit(kTwoPi * i / 2000.0) * d.radius) > 1.0 + 1e-7) return false;
    }
    return true;
}

bool disc_contains_ball(const NormModel& m, const Disc& d) {
    for (int i = 0; i < 2000; ++i) {
        if (norm2(m.radial_point(kTwoPi * i / 2000.0) - d.center) > d.radius * (1.0 + 1e-7)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("inner disc examples") {
    const auto e = make_euclidean();
    for (double t : {0.0, 1.0, 2.5}) {
        const auto d = inner_disc(e, e.sphere_point(t));
        REQUIRE(d);
        CHECK(d->radius == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(norm2(d->center) < 1e-9);
    }
    const auto l15 = make_lp(1.5);
    CHECK_FALSE(inner_disc(l15, l15.sphere_point(0.0)));
    const auto el = ellipse_model(1.0, 2.0);
    const auto d = inner_disc(el, el.sphere_point(kPi / 2));
    REQUIRE(d);
    CHECK(d->radius >= 0.5 - 1e-9);
    CHECK(d->radius == doctest::Approx(0.5).epsilon(1e-6));
    // l1 face midpoint: the incircle.
    const auto l1 = make_lp(1.0);
    const auto f = inner_disc(l1, l1.sphere_point(kPi / 4));
    REQUIRE(f);
    CHECK(f->radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
    CHECK_FALSE(inner_disc(l1, l1.sphere_point(0.0)));
}

TEST_CASE("outer disc examples") {
    const auto e = make_euclidean();
    const auto d = outer_disc(e, e.sphere_point(0.7));
    REQUIRE(d);
    CHECK(d->radius == doctest::Approx(1.0).epsilon(1e-9));
    const auto l4 = make_lp(4.0);
    CHECK_FALSE(outer_disc(l4, l4.sphere_point(0.0)));
    CHECK(outer_disc(l4, l4.sphere_point(kPi / 4)));
    // Vertices have outer discs, faces do not.
    const auto l1 = make_lp(1.0);
    CHECK(outer_disc(l1, l1.sphere_point(0.0)));
    CHECK_FALSE(outer_disc(l1, l1.sphere_point(0.3)));
    // Ellipse at the end of the minor axis: radius of curvature a^2/b = 4.
    const auto el = ellipse_model(1.0, 2.0);
    const auto o = outer_disc(el, el.sphere_point(0.0));
    REQUIRE(o);
    CHECK(o->radius == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("disc invariants across models") {
    const NormModel models[] = {make_lp(1.5), make_lp(4.0), make_grandpa_pig(), make_quadrant_mix(1.5, 4.0),
                                make_splicing(), ellipse_model(1.0, 2.0), make_blend(make_lp(4.0), 1.0),
                                make_l2_l1_hybrid()};
    for (const auto& m : models) {
        CAPTURE(m.label());
        bool some_outer = false;
        for (int i = 0; i < 40; ++i) {
            const SpherePoint x = m.sphere_point(kTwoPi * (i + 0.37) / 40.0);
            if (const auto d = inner_disc(m, x)) {
                CHECK(disc_inside(m, *d));
                CHECK(norm2(d->center - x.point) == doctest::Approx(d->radius).epsilon(1e-9));
                if (x.curvature > 0.0) CHECK(d->radius <= 1.0 / x.curvature + 1e-6);
            }
            if (const auto d = outer_disc(m, x)) {
                some_outer = true;
                CHECK(disc_contains_ball(m, *d));
            }
        }
        CHECK(some_outer);
    }
}

TEST_CASE("smooth strictly convex models have inner discs almost everywhere") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0.0, kTwoPi);
    const NormModel models[] = {make_euclidean(), make_lp(4.0), make_blend(make_lp(4.0), 1.0), ellipse_model(1.0, 3.0)};
    for (const auto& m : models) {
        CAPTURE(m.label());
        int hits = 0;
        for (int i = 0; i < 100; ++i) hits += inner_disc(m, m.sphere_point(U(rng))) ? 1 : 0;
        CHECK(hits == 100);
    }
}

TEST_CASE("build_inner_ellipse") {
    const Ellipse e = build_inner_ellipse(1.0, 2.0);
    CHECK(e.A() == doctest::Approx(3.0));
    CHECK(e.B() == doctest::Approx(2.0));
    CHECK(e.C() == doctest::Approx(-4.0));
    CHECK(e.M.quad({1, 1}) == doctest::Approx(1.0));
    const Vec2 grad = e.M.apply({1, 1}) * 2.0;
    CHECK(std::abs(grad.y) < 1e-12);
    CHECK(curvature_implicit(grad, e.M * 2.0) == doctest::Approx(2.0));
    for (double h : {0.3, 1.0, 2.5}) {
        for (double k : {0.01, 0.5, 7.0}) {
            const Ellipse f = build_inner_ellipse(h, k);
            const Vec2 g = f.M.apply({1, h}) * 2.0;
            CHECK(f.M.quad({1, h}) == doctest::Approx(1.0));
            CHECK(curvature_implicit(g, f.M * 2.0) == doctest::Approx(k));
            CHECK(4 * f.A() * f.B() - f.C() * f.C() == doctest::Approx(4 * k));
        }
    }
    CHECK_THROWS_AS(build_inner_ellipse(1.0, 0.0), Error);
    CHECK_THROWS_AS(build_inner_ellipse(0.0, 1.0), Error);
}

TEST_CASE("john ellipse") {
    const auto je = john_ellipse(make_euclidean());
    CHECK(je.M.a == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(je.M.b) < 1e-6);
    CHECK(je.M.c == doctest::Approx(1.0).epsilon(1e-6));
    const auto ji = john_ellipse(make_lp(kInfinity));
    CHECK(ji.semi_axes()[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    CHECK(ji.semi_axes()[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    const auto j1 = john_ellipse(make_lp(1.0));
    CHECK(j1.area() == doctest::Approx(kPi).epsilon(1e-6));
    const auto jel = john_ellipse(ellipse_model(1.0, 2.0));
    CHECK(jel.M.a == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(jel.M.c == doctest::Approx(0.25).epsilon(1e-6));

    // Brute force over axis-aligned ellipses through the corners of the square: area >= 2 pi.
    for (int i = 1; i < 50; ++i) {
        const double a2 = 1.0 + 0.1 * i;  // x^2/a2 + y^2/b2 = 1 through (1,1)
        const double b2 = a2 / (a2 - 1.0);
        CHECK(kPi * std::sqrt(a2 * b2) >= ji.area() * (1.0 - 1e-6));
    }
}

TEST_CASE("E_b family") {
    const auto e = make_euclidean();
    const SpherePoint x = e.sphere_point(0.4);
    const Ellipse u = outer_family(e, x, 1.0);
    CHECK(u.M.a == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(u.M.c == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(outer_family(e, x, 1e-7), Error);
    const double c = 1.0 / std::sqrt(8.0);
    for (int i = 0; i < 32; ++i) {
        const SpherePoint p = e.sphere_point(kTwoPi * i / 32.0);
        const Ellipse E = outer_family(e, p, c);
        CHECK(E.M.quad(p.point) == doctest::Approx(1.0));
        for (int k = 0; k < 256; ++k) CHECK(E.contains(e.radial_point(kTwoPi * k / 256.0), 1e-12));
    }
}

TEST_CASE("inner and outer ellipses") {
    const NormModel models[] = {make_grandpa_pig(), make_lp(3.0), make_splicing(), make_blend(make_lp(4.0), 1.0)};
    for (const auto& m : models) {
        CAPTURE(m.label());
        for (int i = 0; i < 24; ++i) {
            const SpherePoint x = m.sphere_point(kTwoPi * (i + 0.2) / 24.0);
            if (const auto E = inner_ellipse(m, x)) {
                CHECK(E->M.quad(x.point) == doctest::Approx(1.0).epsilon(1e-9));
                for (int k = 0; k < 512; ++k) CHECK(m.gauge(E->boundary(kTwoPi * k / 512.0)) <= 1.0 + 1e-9);
            }
            if (const auto F = outer_ellipse(m, x)) {
                CHECK(F->M.quad(x.point) == doctest::Approx(1.0).epsilon(1e-9));
                for (int k = 0; k < 512; ++k) CHECK(F->contains(m.radial_point(kTwoPi * k / 512.0), 1e-9));
            }
        }
    }
    const auto l15 = make_lp(1.5);
    CHECK_FALSE(inner_ellipse(l15, l15.sphere_point(0.0)));
    const auto l4 = make_lp(4.0);
    CHECK_FALSE(outer_ellipse(l4, l4.sphere_point(0.0)));
}

TEST_CASE("dual transfer") {
    const auto e = make_euclidean();
    const auto r = tangency_report(e, e.sphere_point(1.1));
    const auto d = dual_transfer(r, e);
    REQUIRE(d.inner_ellipse);
    REQUIRE(d.outer_ellipse);
    CHECK(d.point.point.x == doctest::Approx(r.point.point.x));
    CHECK(d.point.curvature == doctest::Approx(1.0).epsilon(1e-9));
    const Ellipse unit_disc{Sym2::identity()};
    CHECK(unit_disc.M.inverse().a == 1.0);

    const auto l15 = make_lp(1.5), l3 = make_lp(3.0);
    const auto rl = tangency_report(l15, l15.sphere_point(0.6));
    REQUIRE(rl.inner_ellipse);
    const auto dl = dual_transfer(rl, l15);
    REQUIRE(dl.outer_ellipse);
    CHECK(l3.gauge(dl.point.point) == doctest::Approx(1.0).epsilon(1e-9));
    for (int k = 0; k < 1000; ++k) CHECK(dl.outer_ellipse->contains(l3.radial_point(kTwoPi * k / 1000.0), 1e-6));
    // Involution on the forms.
    const auto back = dual_transfer(dl, l3);
    REQUIRE(back.inner_ellipse);
    CHECK(back.inner_ellipse->M.a == doctest::Approx(rl.inner_ellipse->M.a).epsilon(1e-9));
    CHECK(back.inner_ellipse->M.b == doctest::Approx(rl.inner_ellipse->M.b).epsilon(1e-9));
    CHECK(back.inner_ellipse->M.c == doctest::Approx(rl.inner_ellipse->M.c).epsilon(1e-9));
    // Dual curvature against the dual l_3 sphere.
    CHECK(dl.point.curvature == doctest::Approx(l3.sphere_point_at(dl.point.point).curvature).epsilon(1e-6));

    CHECK_THROWS_AS(dual_transfer(tangency_report(make_lp(1.0), make_lp(1.0).sphere_point(0.0)), make_lp(1.0)), Error);
}

TEST_CASE("dual curvature of an ellipse") {
    const Sym2 M{0.25, 0.1, 1.0};
    const auto el = make_ellipse_intersection(M, M);
    const auto du = make_ellipse_intersection(M.inverse(), M.inverse());
    for (int i = 0; i < 16; ++i) {
        const SpherePoint x = el.sphere_point(kTwoPi * i / 16.0);
        const double k = dual_curvature(x.curvature, x.point, x.support);
        CHECK(k == doctest::Approx(du.sphere_point_at(x.support).curvature).epsilon(1e-9));
    }
}
