#include <doctest.h>

#include <cmath>
#include <random>

#include "semitrans/curvature.hpp"
#include "semitrans/geometry_core.hpp"

using namespace semitrans;

namespace {

// Max column l1 sum: the operator norm of l1 in closed form.
double l1_operator_norm(const LinearMap2& T) {
    return std::max(std::abs(T.m11) + std::abs(T.m21), std::abs(T.m12) + std::abs(T.m22));
}

NormModel ellipse_2_1() {
    const Sym2 m{0.25, 0.0, 1.0};
    return make_ellipse_intersection(m, m);
}

}  // namespace

TEST_CASE("gauge examples") {
    CHECK(gauge(make_lp(1.0), {1, 1}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(gauge(make_quadrant_mix(1.5, 4.0), {1, -1}) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
    CHECK(gauge(make_grandpa_pig(), {1, 0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gauge(make_lp(3.0), {0, 0}) == 0.0);
}

TEST_CASE("dual gauge examples") {
    CHECK(dual_gauge(make_lp(1.0), {1, 1}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dual_gauge(make_euclidean(), {3, 4}) == doctest::Approx(5.0).epsilon(1e-12));
    const auto diamond = make_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(dual_gauge(diamond, {0.3, 0.7}) == doctest::Approx(0.7).epsilon(1e-12));
    // l_p is dual to l_q with 1/p + 1/q = 1.
    const Vec2 f{0.4, -1.3};
    CHECK(dual_gauge(make_lp(3.0), f) == doctest::Approx(std::pow(std::pow(std::abs(f.x), 1.5) + std::pow(std::abs(f.y), 1.5), 1.0 / 1.5)).epsilon(1e-8));
}

TEST_CASE("sphere point examples") {
    const SpherePoint e = sphere_point(make_euclidean(), 0.0);
    CHECK(e.point.x == doctest::Approx(1.0));
    CHECK(std::abs(e.point.y) < 1e-15);
    CHECK(e.support.x == doctest::Approx(1.0));
    CHECK(e.tangent.y == doctest::Approx(1.0));
    CHECK(e.curvature == doctest::Approx(1.0).epsilon(1e-12));

    const SpherePoint d = sphere_point(make_lp(1.0), kPi / 4);
    CHECK(d.smooth);
    CHECK(d.point.x == doctest::Approx(0.5));
    CHECK(d.point.y == doctest::Approx(0.5));
    CHECK(d.support.x == doctest::Approx(1.0));
    CHECK(d.support.y == doctest::Approx(1.0));
    CHECK(d.tangent.x == doctest::Approx(-0.5));
    CHECK(d.tangent.y == doctest::Approx(0.5));

    const SpherePoint v = sphere_point(make_lp(1.0), 0.0);
    CHECK_FALSE(v.smooth);
    CHECK(v.infinite_curvature());

    const SpherePoint el = sphere_point(ellipse_2_1(), 0.0);
    CHECK(el.point.x == doctest::Approx(2.0));
    // Oracle: x^2/4 + y^2 = 1 at (2,0), gradient (1,0), Hessian diag(1/2, 2).
    CHECK(el.curvature == doctest::Approx(curvature_implicit({1, 0}, {0.5, 0, 2})).epsilon(1e-10));
    CHECK(el.curvature == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("sphere point invariants") {
    const NormModel models[] = {make_euclidean(), make_lp(1.5), make_lp(4.0), make_grandpa_pig(),
                                make_quadrant_mix(1.5, 4.0), make_splicing(), make_blend(make_lp(4.0), 1.0)};
    for (const auto& m : models) {
        CAPTURE(m.label());
        for (int i = 0; i < 97; ++i) {
            const double t = kTwoPi * (i + 0.31) / 97.0;
            const SpherePoint sp = m.sphere_point(t);
            CHECK(m.gauge(sp.point) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(dot(sp.support, sp.point) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(std::abs(dot(sp.support, sp.tangent)) < 1e-9);
            CHECK(m.gauge(sp.tangent) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(cross(sp.point, sp.tangent) > 0.0);
            if (sp.smooth) CHECK(dual_gauge(m, sp.support) == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("operator norm examples") {
    const auto l1 = make_lp(1.0);
    const LinearMap2 T1{0.5, 0.0, 0.5, 1.0};
    CHECK(operator_norm(l1, T1).value == doctest::Approx(l1_operator_norm(T1)).epsilon(1e-7));
    CHECK(operator_norm(l1, T1).value == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(operator_norm(make_grandpa_pig(), LinearMap2::identity()).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(operator_norm(l1, {0, 1, 1, 0}).value == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const LinearMap2 T{U(rng), U(rng), U(rng), U(rng)};
        CHECK(operator_norm(l1, T).value == doctest::Approx(l1_operator_norm(T)).epsilon(1e-7));
    }
}

TEST_CASE("gauge properties") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    const NormModel models[] = {make_lp(1.0), make_lp(3.0), make_lp(kInfinity), make_grandpa_pig(),
                                make_quadrant_mix(1.5, 4.0), make_l2_l1_hybrid(), make_splicing(), ellipse_2_1()};
    for (const auto& m : models) {
        CAPTURE(m.label());
        for (int i = 0; i < 100; ++i) {
            const Vec2 v{U(rng), U(rng)};
            for (double t : {-2.0, 0.5, 3.0})
                CHECK(m.gauge(v * t) == doctest::Approx(std::abs(t) * m.gauge(v)).epsilon(1e-12));
            CHECK(m.gauge(-v) == m.gauge(v));
        }
        for (int i = 0; i < 1000; ++i) {
            const Vec2 u{U(rng), U(rng)}, v{U(rng), U(rng)};
            CHECK(m.gauge(u + v) <= m.gauge(u) + m.gauge(v) + 1e-9);
        }
        for (int i = 0; i < 5; ++i) {
            const LinearMap2 S{U(rng), U(rng), U(rng), U(rng)}, T{U(rng), U(rng), U(rng), U(rng)};
            CHECK(operator_norm(m, S * T).value <= operator_norm(m, S).value * operator_norm(m, T).value + 1e-6);
        }
    }
}
