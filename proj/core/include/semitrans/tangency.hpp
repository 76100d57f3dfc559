#pragma once

#include <array>
#include <optional>

#include "semitrans/linalg.hpp"
#include "semitrans/norm_model.hpp"

namespace semitrans {

/// Origin-centred ellipse {z : z^T M z <= 1}.
struct Ellipse {
    Sym2 M;

    /// Coefficients of A x^2 + B y^2 + C x y = 1.
    double A() const { return M.a; }
    double B() const { return M.c; }
    double C() const { return 2.0 * M.b; }
    static Ellipse from_coeffs(double A, double B, double C) { return {{A, C / 2.0, B}}; }

    /// Semi-axes, shorter first.
    std::array<double, 2> semi_axes() const;
    double area() const;
    bool contains(Vec2 z, double tol = 0.0) const { return M.quad(z) <= 1.0 + tol; }
    /// Boundary point at parameter phi of the principal parametrisation.
    Vec2 boundary(double phi) const;
};

struct TangencyReport {
    SpherePoint point;
    std::optional<Disc> inner_disc;
    std::optional<Disc> outer_disc;
    std::optional<Ellipse> inner_ellipse;
    std::optional<Ellipse> outer_ellipse;
};

inline constexpr double kMinInnerRadius = 1e-6;
inline constexpr double kMaxOuterRadius = 1e7;

/// Largest disc D with x in D and D inside the ball, searched along the inward normal at x.
std::optional<Disc> inner_disc(const NormModel& model, const SpherePoint& x);

/// Smallest disc D with x on its boundary and the ball inside D; none beyond kMaxOuterRadius.
std::optional<Disc> outer_disc(const NormModel& model, const SpherePoint& x);

/// The ellipse A x^2 + B y^2 + C x y = 1 through (1, h) with a vertical tangent and curvature kappa_target there.
Ellipse build_inner_ellipse(double h, double kappa_target);

/// {z : <x*, z>^2 + b^2 |z - <x*, z> x|^2 <= 1}, |.| the norm of the John ellipse.
Ellipse outer_family(const NormModel& model, const SpherePoint& x, double b);

/// Minimal-area origin-centred ellipse containing the unit ball. Cached per model.
Ellipse john_ellipse(const NormModel& model);

/// Largest b with the ball inside outer_family(x, b); none when the ball has no outer ellipse at x.
std::optional<Ellipse> outer_ellipse(const NormModel& model, const SpherePoint& x);

/// Smallest b with outer_family(x, b) inside the ball; none when x has no inner ellipse.
std::optional<Ellipse> inner_ellipse(const NormModel& model, const SpherePoint& x);

TangencyReport tangency_report(const NormModel& model, const SpherePoint& x);

/// The report at the dual point x*: inner and outer ellipses swap under M -> M^{-1}.
/// Discs are not transferred. Throws NonSmoothPoint, or TangencySolveFailed when the
/// transferred ellipses fail the containment check on the dual sphere.
TangencyReport dual_transfer(const TangencyReport& report, const NormModel& model);

}  // namespace semitrans
