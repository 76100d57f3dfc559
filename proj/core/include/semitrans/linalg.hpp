#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace semitrans {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr bool operator==(const Vec2&) const = default;

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
/// Counterclockwise quarter turn.
constexpr Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }
inline double norm2(Vec2 v) { return std::hypot(v.x, v.y); }
inline Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

/// Wraps an angle into [0, 2pi).
inline double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

/// Symmetric 2x2 matrix [[a, b], [b, c]].
struct Sym2 {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    static constexpr Sym2 identity() { return {1.0, 0.0, 1.0}; }
    static constexpr Sym2 outer(Vec2 u) { return {u.x * u.x, u.x * u.y, u.y * u.y}; }

    constexpr Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, b * v.x + c * v.y}; }
    constexpr double quad(Vec2 v) const { return a * v.x * v.x + 2.0 * b * v.x * v.y + c * v.y * v.y; }
    constexpr double det() const { return a * c - b * b; }
    constexpr double trace() const { return a + c; }
    constexpr Sym2 operator+(Sym2 o) const { return {a + o.a, b + o.b, c + o.c}; }
    constexpr Sym2 operator-(Sym2 o) const { return {a - o.a, b - o.b, c - o.c}; }
    constexpr Sym2 operator*(double s) const { return {a * s, b * s, c * s}; }

    Sym2 inverse() const {
        const double d = det();
        return {c / d, -b / d, a / d};
    }

    /// Eigenvalues in ascending order.
    std::array<double, 2> eigenvalues() const {
        const double m = 0.5 * (a + c);
        const double r = std::hypot(0.5 * (a - c), b);
        return {m - r, m + r};
    }

    /// Unit eigenvector for the smaller eigenvalue.
    Vec2 minor_axis() const {
        const double lo = eigenvalues()[0];
        Vec2 v = std::abs(b) > 1e-300 ? Vec2{b, lo - a} : (a <= c ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0});
        if (std::abs(b) > 1e-300 && norm2(v) < 1e-300) v = {lo - c, b};
        return v / norm2(v);
    }

    bool positive_definite() const { return a > 0.0 && det() > 0.0; }

    /// Matrix power M^p for positive-definite M via eigendecomposition.
    Sym2 power(double p) const {
        const auto ev = eigenvalues();
        const Vec2 u = minor_axis();
        const Vec2 w = rot90(u);
        return outer(u) * std::pow(ev[0], p) + outer(w) * std::pow(ev[1], p);
    }
};

/// General 2x2 linear map acting on column vectors.
struct LinearMap2 {
    double m11 = 1.0;
    double m12 = 0.0;
    double m21 = 0.0;
    double m22 = 1.0;

    static constexpr double kSingularDet = 1e-12;

    static constexpr LinearMap2 identity() { return {}; }
    static constexpr LinearMap2 from_sym(Sym2 s) { return {s.a, s.b, s.b, s.c}; }
    /// Map whose columns are the images of e1 and e2.
    static constexpr LinearMap2 from_columns(Vec2 c1, Vec2 c2) { return {c1.x, c2.x, c1.y, c2.y}; }
    static LinearMap2 rotation(double phi) {
        const double c = std::cos(phi), s = std::sin(phi);
        return {c, -s, s, c};
    }

    constexpr Vec2 apply(Vec2 v) const { return {m11 * v.x + m12 * v.y, m21 * v.x + m22 * v.y}; }
    constexpr Vec2 operator()(Vec2 v) const { return apply(v); }
    constexpr double det() const { return m11 * m22 - m12 * m21; }
    bool invertible() const { return std::abs(det()) > kSingularDet; }

    constexpr LinearMap2 inverse() const {
        const double d = det();
        return {m22 / d, -m12 / d, -m21 / d, m11 / d};
    }
    constexpr LinearMap2 transpose() const { return {m11, m21, m12, m22}; }

    constexpr LinearMap2 operator*(const LinearMap2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
    constexpr LinearMap2 operator*(double s) const { return {m11 * s, m12 * s, m21 * s, m22 * s}; }
    constexpr LinearMap2 operator+(const LinearMap2& o) const {
        return {m11 + o.m11, m12 + o.m12, m21 + o.m21, m22 + o.m22};
    }
    constexpr LinearMap2 operator-(const LinearMap2& o) const {
        return {m11 - o.m11, m12 - o.m12, m21 - o.m21, m22 - o.m22};
    }

    double max_abs_entry() const {
        return std::max(std::max(std::abs(m11), std::abs(m12)), std::max(std::abs(m21), std::abs(m22)));
    }
    bool finite() const {
        return std::isfinite(m11) && std::isfinite(m12) && std::isfinite(m21) && std::isfinite(m22);
    }
};

struct Disc {
    Vec2 center;
    double radius = 1.0;
};

}  // namespace semitrans
