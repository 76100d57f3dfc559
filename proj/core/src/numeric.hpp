#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

namespace semitrans::detail {

inline constexpr int kBrentBits = 45;

/// Local maximum of f on [lo, hi]; returns (argmax, max).
template <class F>
std::pair<double, double> maximize(F&& f, double lo, double hi, int bits = kBrentBits) {
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::brent_find_minima([&](double t) { return -f(t); }, lo, hi, bits, iters);
    return {r.first, -r.second};
}

template <class F>
std::pair<double, double> minimize(F&& f, double lo, double hi, int bits = kBrentBits) {
    std::uintmax_t iters = 200;
    auto r = boost::math::tools::brent_find_minima(f, lo, hi, bits, iters);
    return {r.first, r.second};
}

/// Root of f in [lo, hi] given a sign change; plain bisection to absolute tolerance.
template <class F>
double bisect_root(F&& f, double lo, double hi, double tol = 1e-13, int max_iter = 200) {
    double flo = f(lo);
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Root of f in [lo, hi] given a sign change, TOMS 748.
template <class F>
double toms_root(F&& f, double lo, double hi) {
    std::uintmax_t iters = 100;
    auto tol = boost::math::tools::eps_tolerance<double>(50);
    const double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
    return 0.5 * (r.first + r.second);
}

}  // namespace semitrans::detail
