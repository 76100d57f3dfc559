#include "semitrans/geometry_core.hpp"

#include <algorithm>
#include <vector>

#include "numeric.hpp"

namespace semitrans {

OperatorNorm operator_norm(const NormModel& model, const LinearMap2& T) {
    const auto pts = model.cache();
    const std::size_t n = pts.size();
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = model.gauge(T(pts[i]));

    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = vals[i];
        if (v >= vals[(i + n - 1) % n] && v >= vals[(i + 1) % n]) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    if (peaks.size() > 3) peaks.resize(3);

    OperatorNorm best{vals[peaks.front()], NormModel::cache_angle(peaks.front())};
    const double step = kTwoPi / static_cast<double>(n);
    auto f = [&](double t) { return model.gauge(T(model.radial_point(t))); };
    for (std::size_t i : peaks) {
        const double t0 = NormModel::cache_angle(i);
        const auto [t, v] = detail::maximize(f, t0 - step, t0 + step);
        if (v > best.value) best = {v, wrap_angle(t)};
    }
    return best;
}

}  // namespace semitrans
