#include <doctest.h>

#include <cmath>

#include "semitrans/curve_builder.hpp"
#include "semitrans/error.hpp"
#include "semitrans/tangency.hpp"

using namespace semitrans;

namespace {

// K(s) for the staircase by brute-force midpoint sums.
double K_oracle(double s, int n_max) {
    const int m = 2000000;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += k_staircase((i + 0.5) * s / m, n_max);
    return acc * s / m;
}

const BuiltCurve& stair() {
    static const BuiltCurve c = integrate_curve(staircase());
    return c;
}

}  // namespace

TEST_CASE("k_staircase examples") {
    CHECK(k_staircase(0.25, 20) == 0.25);
    CHECK(k_staircase(0.3125, 20) == 0.25);
    CHECK(k_staircase(0.2, 20) == 1.0);
    CHECK(k_staircase(-1.0, 20) == 1.0);
    CHECK(k_staircase(0.55, 20) == 0.5);
    CHECK(k_staircase(0.55, 0) == 1.0);
    CHECK_THROWS_AS(k_staircase(1.5, 20), Error);
    CHECK_THROWS_AS(k_staircase(-2.0, 20), Error);
    const auto k = staircase(20);
    for (double s : {-1.0, 0.0, 1e-7, 0.13, 0.2, 0.26, 0.6, 1.0}) CHECK(k(s) == k_staircase(s, 20));
}

TEST_CASE("integrate_curve on constant curvature") {
    CurvatureFunction k;
    k.hi = kPi / 2.0;
    const auto c = integrate_curve(k);
    CHECK(std::abs(c.endpoint.x - 1.0) < 1e-8);
    CHECK(std::abs(c.endpoint.y) < 1e-8);
    for (const auto& q : c.samples) CHECK(std::abs(norm2(q.point) - 1.0) < 1e-10);
    CHECK(c.samples.front().point.x == doctest::Approx(-1.0));
    CHECK_THROWS_AS(integrate_curve(k, 1e-3), Error);
}

TEST_CASE("staircase curve") {
    const auto& c = stair();
    CHECK(std::abs(c.end_angle - 5.0 / 6.0) < 1e-6);
    CHECK(std::abs(c.end_angle - K_oracle(1.0, 20)) < 1e-6);
    double series = 1.0;
    for (int n = 1; n <= 20; ++n) series -= std::ldexp(1.0, -n - 2) * (1.0 - std::ldexp(1.0, -n));
    CHECK(std::abs(c.end_angle - series) < 1e-12);
    CHECK(c.endpoint.x > 0.0);
    CHECK(c.endpoint.x < 1.0);
    CHECK(c.endpoint.y > -1.0);
    CHECK(c.endpoint.y < 0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double s = i / 1000.0;
        const double K = c.angle_at(s);
        CHECK(K <= s + 1e-12);
        CHECK(K >= 0.6 * s - 1e-12);
    }
    for (std::size_t i = 1; i < c.samples.size(); ++i) {
        CHECK(c.samples[i].K >= c.samples[i - 1].K);
        const auto& q = c.samples[i];
        if (q.s > 0.0 && q.s < 1.0) {
            CHECK(std::cos(q.K) > 0.0);
            CHECK(std::sin(q.K) > 0.0);
        }
        CHECK(norm2(q.point - Vec2{0.0, -1.0}) <= 5.0 / 3.0 + 1e-6);
    }
}

TEST_CASE("unit speed by finite differences") {
    const auto& c = stair();
    const double h = 1e-5;
    double worst = 0.0;
    for (int i = 1; i < 2000; ++i) {
        const double s = -1.5 + 2.49 * i / 2000.0;
        worst = std::max(worst, std::abs(norm2(c.at(s + h) - c.at(s - h)) / (2 * h) - 1.0));
    }
    CHECK(worst <= 1e-8);
    // samples agree with the exact continuation
    for (std::size_t i = 0; i + 1 < c.samples.size(); i += 97) CHECK(norm2(c.at(c.samples[i + 1].s) - c.samples[i + 1].point) < 1e-12);
}

TEST_CASE("close_sphere") {
    SUBCASE("quarter circle closes to the Euclidean norm") {
        CurvatureFunction k;
        k.hi = kPi / 2.0;
        const auto m = close_sphere(integrate_curve(k));
        for (int i = 0; i < 50; ++i) {
            const Vec2 v = unit(0.13 * i) * (0.5 + i);
            CHECK(m.gauge(v) == doctest::Approx(norm2(v)).epsilon(1e-12));
        }
    }
    SUBCASE("unit curvature up to s = 1 closes with unit circles") {
        CurvatureFunction k;
        const auto cc = closing_circles(integrate_curve(k));
        CHECK(cc.c.radius == doctest::Approx(1.0));
        CHECK(cc.c_prime.radius == doctest::Approx(1.0));
        CHECK(cc.a > 1.0);
    }
    SUBCASE("staircase") {
        const auto cc = closing_circles(stair());
        CHECK(cc.a > 1.0);
        CHECK(cc.residual < 1e-9);
        CHECK(cc.c.radius > 0.0);
        CHECK(cc.c_prime.radius > 0.0);
        const auto m = build_nobst();
        CHECK(m.label() == "nobst");
        const auto d = outer_disc(m, m.sphere_point(-kPi / 2.0));
        REQUIRE(d);
        CHECK(d->radius <= 5.0 / 3.0 + 1e-6);
        for (const auto& q : stair().samples) {
            if (q.s >= 0.0) CHECK(m.gauge(q.point) == doctest::Approx(1.0).epsilon(1e-9));
        }
        CHECK(m.gauge({1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.gauge({-0.3, 0.7}) == m.gauge({0.3, -0.7}));
        CHECK(m.gauge({-0.3, 0.7}) == doctest::Approx(m.gauge({0.3, 0.7})).epsilon(1e-12));
    }
}

TEST_CASE("nobst witness") {
    const auto m = build_nobst();
    const auto w = nobst_witness(m, stair(), {1, 2, 3, 4, 5, 6, 7, 8});
    REQUIRE(w.size() == 8);
    for (std::size_t i = 1; i < w.size(); ++i) {
        CHECK(w[i].bound > w[i - 1].bound);
        CHECK(w[i].bound / w[i - 1].bound == doctest::Approx(std::sqrt(2.0)).epsilon(0.1));
    }
    const auto z = nobst_witness(m, stair(), {0, 0});
    CHECK(z[0].bound == z[1].bound);
}
