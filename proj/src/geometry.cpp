// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include "primrrt/geometry.hpp"

#include "primrrt/errors.hpp"

namespace primrrt {

double normalize_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidArgument("normalize_angle: non-finite angle");
    }
    // remainder() is exact and lands in [-pi, pi]; fold the open end.
    double r = std::remainder(theta, kTwoPi);
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

double angle_difference(double a, double b) { return normalize_angle(a - b); }

Pose compose(const Pose& base, const RelativePose& local) noexcept {
    const double c = std::cos(base.theta);
    const double s = std::sin(base.theta);
    double heading = std::remainder(base.theta + local.dtheta, kTwoPi);
    if (heading <= -kPi) {
        heading += kTwoPi;
    }
    return {base.x + c * local.dx - s * local.dy, base.y + s * local.dx + c * local.dy, heading};
}

bool is_finite(const Point& p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }

bool is_finite(const Pose& p) noexcept {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.theta);
}

bool approx_equal(const Pose& a, const Pose& b, double tol) noexcept {
    if (!is_finite(a) || !is_finite(b)) {
        return false;
    }
    return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol &&
           std::abs(angle_difference(a.theta, b.theta)) <= tol;
}

bool approx_equal(const RelativePose& a, const RelativePose& b, double tol) noexcept {
    return approx_equal(Pose{a.dx, a.dy, a.dtheta}, Pose{b.dx, b.dy, b.dtheta}, tol);
}

}  // namespace primrrt
