#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace akgrowth {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Map an angle to the canonical range [0, 2*pi). Idempotent: values already
/// in range are returned unchanged.
inline double canonical_angle(double x) {
    if (x >= 0.0 && x < two_pi) return x;
    double r = std::fmod(x, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;  // fmod rounding can land exactly on 2*pi
    return r;
}

/// Shortest angular distance between two angles, in [0, pi].
inline double circular_distance(double a, double b) {
    double d = std::fabs(canonical_angle(a) - canonical_angle(b));
    return d > std::numbers::pi ? two_pi - d : d;
}

/// A location on the unit circle, stored as a canonical angle in [0, 2*pi).
/// Angles differing by a multiple of 2*pi compare equal (up to rounding of
/// the reduction itself).
class CirclePoint {
public:
    CirclePoint() = default;
    explicit CirclePoint(double angle) : angle_(canonical_angle(angle)) {}

    double angle() const { return angle_; }

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
        return circular_distance(a.angle_, b.angle_) <= equality_slack;
    }
    friend bool operator!=(const CirclePoint& a, const CirclePoint& b) { return !(a == b); }

    // Absorbs the rounding of reducing angles of magnitude up to ~1e3.
    static constexpr double equality_slack = 1e-12;

private:
    double angle_ = 0.0;
};

/// Uniform grid x_i = 2*pi*i/n, i = 0..n-1 (the point 2*pi is identified with 0).
inline std::vector<double> uniform_grid(std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = two_pi * static_cast<double>(i) / static_cast<double>(n);
    return xs;
}

}  // namespace akgrowth
