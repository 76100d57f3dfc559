#pragma once

#include <string>
#include <vector>

#include "semitrans/linalg.hpp"
#include "semitrans/norm_model.hpp"

namespace semitrans::tools {

enum class Overlay { None, Discs, Ellipses };

struct SvgOptions {
    Overlay overlay = Overlay::None;
    // sphere points that get overlays
    std::vector<double> thetas{0.0, 0.7, 1.6, 2.5};
    // images L[S], drawn in blue
    std::vector<LinearMap2> images;
};

/// Sphere polyline through the cache points, closed on its first point.
std::vector<Vec2> sphere_polyline(const NormModel& model);

/// viewBox [-1.6, 1.6]^2 with the y axis pointing up.
std::string render_svg(const NormModel& model, const SvgOptions& options = {});

}  // namespace semitrans::tools
