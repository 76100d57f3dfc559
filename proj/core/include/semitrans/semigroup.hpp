#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semitrans/linalg.hpp"
#include "semitrans/norm_model.hpp"

namespace semitrans {

inline constexpr double kContractionTol = 1e-7;

struct ContractionCertificate {
    LinearMap2 T;
    double op_norm = 0.0;
    double inv_norm = 0.0;
    bool is_contractive = false;
    /// op_norm in (1, 1 + tolerance]: accepted, but only up to grid resolution.
    bool boundary = false;
    double witness_angle = 0.0;
    double tolerance = kContractionTol;
};

enum class Reach { AllSphere, AllButSet, DenseCandidate, Restricted };
std::string_view to_string(Reach r);

struct OrbitWitness {
    SpherePoint y;
    ContractionCertificate certificate;
};

struct OrbitReport {
    SpherePoint x;
    Reach reachable = Reach::Restricted;
    /// The excluded points for AllButSet.
    std::vector<Vec2> excluded;
    std::string description;
    std::vector<OrbitWitness> witnesses;
    std::optional<double> bound_K;
};

/// a^perp: the gauge-one tangent at a with (a, a^perp, -a) counterclockwise.
Vec2 perp(const NormModel& model, const SpherePoint& a);

/// The map with a -> b and a^perp -> (1 - eps) b^perp.
LinearMap2 make_L_ab(const NormModel& model, const SpherePoint& a, const SpherePoint& b, double eps);

ContractionCertificate certify(const NormModel& model, const LinearMap2& T);

/// ||T|| <= 1 + tolerance, stopping at the first cache point that exceeds it.
bool is_contraction(const NormModel& model, const LinearMap2& T, double tolerance = kContractionTol);
/// A sphere window of 9 cache steps around y lies on the supporting line at y.
bool is_flat(const NormModel& model, const SpherePoint& y);

/// Contractive T with T x = y: outer ellipse at x onto inner ellipse at y, else flat transport
/// when y is flat, else none.
std::optional<ContractionCertificate> orbit_map(const NormModel& model, const SpherePoint& x, const SpherePoint& y);

/// T x = y, T u = eps L u on ker x*; eps halves until T certifies. Throws NotFlat.
ContractionCertificate flat_transport(const NormModel& model, const SpherePoint& x, const SpherePoint& y,
                                      double eps = 0.5);

/// Exact orbit of x in l1^2. Throws WrongModel for any other model.
OrbitReport l1_orbit(const NormModel& model, const SpherePoint& x);

/// Heuristic lower bound for ||T^-1|| over contractions with T x = y: sqrt(k_y / (c k_x)), at least 1.
double inv_norm_lower_bound(const NormModel& model, const SpherePoint& x, const SpherePoint& y);

}  // namespace semitrans
