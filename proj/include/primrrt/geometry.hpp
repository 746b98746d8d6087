// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors
//
// SE(2) poses and planar helpers. Angles are radians in (-pi, pi].

#pragma once

#include <cmath>
#include <numbers>

namespace primrrt {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
    double x{0.0};
    double y{0.0};

    friend bool operator==(const Point&, const Point&) = default;
};

struct Pose {
    double x{0.0};
    double y{0.0};
    double theta{0.0};

    [[nodiscard]] Point position() const noexcept { return {x, y}; }

    friend bool operator==(const Pose&, const Pose&) = default;
};

/// Displacement expressed in the frame of the pose it is applied to.
struct RelativePose {
    double dx{0.0};
    double dy{0.0};
    double dtheta{0.0};

    friend bool operator==(const RelativePose&, const RelativePose&) = default;
};

/// Wraps theta into (-pi, pi]. Throws InvalidArgument for NaN/inf.
[[nodiscard]] double normalize_angle(double theta);

/// Signed shortest rotation taking b onto a, in (-pi, pi].
[[nodiscard]] double angle_difference(double a, double b);

/// base (+) local: rotate (dx, dy) by base.theta, translate, add headings.
[[nodiscard]] Pose compose(const Pose& base, const RelativePose& local) noexcept;

[[nodiscard]] inline double squared_distance(Point a, Point b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

[[nodiscard]] inline double distance(Point a, Point b) noexcept {
    return std::sqrt(squared_distance(a, b));
}

[[nodiscard]] bool is_finite(const Point& p) noexcept;
[[nodiscard]] bool is_finite(const Pose& p) noexcept;

/// Componentwise comparison; headings are compared on the circle.
[[nodiscard]] bool approx_equal(const Pose& a, const Pose& b, double tol = 1e-9) noexcept;
[[nodiscard]] bool approx_equal(const RelativePose& a, const RelativePose& b,
                                double tol = 1e-9) noexcept;

}  // namespace primrrt
