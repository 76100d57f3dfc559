#include <doctest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "semitrans/error.hpp"
#include "semitrans/moduli.hpp"
#include "semitrans/tangency.hpp"

using namespace semitrans;

namespace {

double delta2(double e) { return 1.0 - std::sqrt(1.0 - e * e / 4.0); }

}  // namespace

TEST_CASE("delta_uc examples") {
    const auto e = make_euclidean();
    CHECK(delta_uc(e, 1.0) == doctest::Approx(1.0 - std::sqrt(3.0) / 2.0).epsilon(1e-6));
    CHECK(delta_uc(e, 2.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(delta_uc(make_lp(kInfinity), 1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(delta_uc(e, 0.0), Error);
    CHECK_THROWS_AS(delta_uc(e, 2.5), Error);
    for (int i = 1; i <= 20; ++i) {
        const double eps = 0.1 * i;
        CHECK(std::abs(delta_uc(e, eps) - delta2(eps)) < 1e-4);
    }
}

TEST_CASE("delta_strong examples") {
    const auto e = make_euclidean();
    CHECK(delta_strong(e, e.sphere_point(0.8), 0.6) == doctest::Approx(0.2).epsilon(1e-6));
    const auto li = make_lp(kInfinity);
    CHECK(delta_strong(li, li.sphere_point(0.0), 0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    const auto gp = make_grandpa_pig();
    const SpherePoint x = gp.sphere_point(0.3);
    double prev = 0.0;
    for (double eps : {0.4, 0.2, 0.1, 0.05, 0.02, 0.01}) {
        const double d = delta_strong(gp, x, eps);
        if (eps < 0.4) CHECK(d <= prev + 1e-9);
        prev = d;
    }
    CHECK(prev < 1e-3);
    CHECK_THROWS_AS(delta_strong(e, e.sphere_point(0.0), 1.5), Error);
}

TEST_CASE("power type 2 fits") {
    const auto ce = uc_curve(make_euclidean());
    REQUIRE(ce.power2_coeff);
    CHECK(*ce.power2_coeff >= 0.124);
    CHECK(*ce.power2_coeff <= 0.126);
    CHECK_FALSE(uc_curve(make_lp(kInfinity)).power2_coeff);
    CHECK(uc_curve(make_lp(3.0)).power2_coeff);
    // l4 has quartic modulus; the grid only sees it as a small coefficient
    CHECK(*uc_curve(make_lp(4.0)).power2_coeff < *uc_curve(make_lp(3.0)).power2_coeff);
    for (std::size_t i = 1; i < ce.values.size(); ++i) CHECK(ce.values[i] >= ce.values[i - 1] - 1e-6);
    const std::string csv = curve_csv(ce);
    CHECK(csv.rfind("eps,delta\n", 0) == 0);
}

TEST_CASE("decomposition examples") {
    const auto e = make_euclidean();
    const SpherePoint x = e.sphere_point(0.0);
    const auto d0 = decomposition_check(e, x, x.point);
    CHECK(d0.t == doctest::Approx(1.0));
    CHECK(norm2(d0.u) < 1e-15);
    CHECK(d0.holds);
    const auto d1 = decomposition_check(e, x, {0, 1});
    CHECK(d1.t == doctest::Approx(0.0));
    CHECK(d1.u.y == doctest::Approx(1.0));
    CHECK(d1.delta_hat == doctest::Approx(delta2(1.0)).epsilon(0.05));
    CHECK(d1.delta_hat <= delta2(1.0));
    CHECK(d1.holds);
    const auto l1 = make_lp(1.0);
    CHECK_THROWS_AS(decomposition_check(l1, l1.sphere_point(0.0), {0.1, 0.1}), Error);
}

TEST_CASE("decomposition inequality on random ball points") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(-1.0, 1.0), A(0.0, kTwoPi);
    const auto gp = make_grandpa_pig();
    const auto curve = uc_curve(gp);
    for (int i = 0; i < 1000; ++i) {
        Vec2 z{U(rng), U(rng)};
        z = z * (std::abs(U(rng)) / gp.gauge(z));
        CHECK(decomposition_check(curve, gp, gp.sphere_point(A(rng)), z).holds);
    }
}

TEST_CASE("uniform and strong moduli agree") {
    const NormModel models[] = {make_euclidean(), make_grandpa_pig(), make_lp(3.0)};
    for (const auto& m : models) {
        CAPTURE(m.label());
        for (double eps : {0.1, 0.3, 0.6}) {
            double inf_strong = 1.0;
            for (int i = 0; i < 64; ++i) inf_strong = std::min(inf_strong, delta_strong(m, m.sphere_point(kTwoPi * i / 64), eps));
            const double d = delta_uc(m, 2 * eps);
            CHECK(d <= inf_strong + 1e-3);
            CHECK(std::abs(d - inf_strong) < 5e-3);
        }
    }
}

TEST_CASE("outer disc radius bounds the power type") {
    // Every sphere point has an outer disc of radius <= alpha: delta(eps) >= eps^2 / (8 alpha^2).
    const NormModel models[] = {make_euclidean(), make_splicing(), make_lp(1.5)};
    for (const auto& m : models) {
        CAPTURE(m.label());
        double alpha = 0.0;
        for (const SpherePoint& p : m.table()) {
            const auto d = outer_disc(m, p);
            REQUIRE(d);
            alpha = std::max(alpha, d->radius);
        }
        const auto c = uc_curve(m).power2_coeff;
        REQUIRE(c);
        CHECK(*c >= 1.0 / (8 * alpha * alpha) - 1e-3);
    }
}
