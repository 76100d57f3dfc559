#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitrans/linalg.hpp"
#include "semitrans/norm_model.hpp"

namespace semitrans {

enum class ModulusKind { UC, StrongExtremality };

struct ModulusCurve {
    ModulusKind kind = ModulusKind::UC;
    /// Base point of a strong-extremality curve.
    double x_theta = 0.0;
    std::vector<double> eps_grid;
    std::vector<double> values;
    std::optional<double> power2_coeff;
};

inline constexpr std::size_t kModulusGridSize = 64;
inline constexpr double kModulusGridMin = 1e-2;

/// 64 log-spaced values from 1e-2 to 2 (to hi for the strong modulus).
std::vector<double> modulus_grid(double hi = 2.0, std::size_t n = kModulusGridSize);

/// inf{1 - ||(x+y)/2|| : ||x|| = ||y|| = 1, ||x - y|| = eps}. Throws BadEps outside (0, 2].
double delta_uc(const NormModel& model, double eps);

/// inf{1 - rho : ||y|| = eps, ||rho x +- y|| <= 1}. Throws BadEps outside (0, 1].
double delta_strong(const NormModel& model, const SpherePoint& x, double eps);

ModulusCurve uc_curve(const NormModel& model, const std::vector<double>& eps_grid);
/// The cached curve on the standard grid.
ModulusCurve uc_curve(const NormModel& model);
ModulusCurve strong_curve(const NormModel& model, const SpherePoint& x, const std::vector<double>& eps_grid);

/// min value / eps^2 over the grid, none below 1e-6.
std::optional<double> power2_fit(const ModulusCurve& curve);

/// Largest grid value at or below s: a lower envelope of a nondecreasing modulus.
double curve_lookup(const ModulusCurve& curve, double s);

struct Decomposition {
    double t = 0.0;
    Vec2 u;
    double delta_hat = 0.0;
    bool holds = false;
};

/// z = t x + u with t = <x*, z>, checked against t^2 + delta(||u||) <= 1 + 1e-4.
Decomposition decomposition_check(const NormModel& model, const SpherePoint& x, Vec2 z);
Decomposition decomposition_check(const ModulusCurve& curve, const NormModel& model, const SpherePoint& x, Vec2 z);

std::string curve_csv(const ModulusCurve& curve);

}  // namespace semitrans
