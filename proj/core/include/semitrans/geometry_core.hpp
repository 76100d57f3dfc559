#pragma once

#include "semitrans/linalg.hpp"
#include "semitrans/norm_model.hpp"

namespace semitrans {

inline double gauge(const NormModel& model, Vec2 v) { return model.gauge(v); }

/// sup{<f, y> : gauge(y) <= 1}.
inline double dual_gauge(const NormModel& model, Vec2 f) { return model.support_value(f); }

inline SpherePoint sphere_point(const NormModel& model, double theta) { return model.sphere_point(theta); }

struct OperatorNorm {
    double value = 0.0;
    /// Polar angle of a sphere point where the sup is attained.
    double angle = 0.0;
};

/// sup of gauge(T z) over the unit sphere: grid over the cache, then Brent on the best local maxima.
OperatorNorm operator_norm(const NormModel& model, const LinearMap2& T);

}  // namespace semitrans
