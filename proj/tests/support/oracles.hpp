// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors
//
// Independent reference computations for tests. Nothing here calls the
// library code it is used to check.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "primrrt/geometry.hpp"
#include "primrrt/planner.hpp"
#include "primrrt/primitives.hpp"
#include "primrrt/world.hpp"

namespace primrrt::oracle {

/// Pose composition through an explicit homogeneous 3x3 matrix product.
inline Pose compose_matrix(const Pose& base, const RelativePose& local) {
    using M = std::array<std::array<double, 3>, 3>;
    const auto make = [](double x, double y, double t) {
        return M{{{std::cos(t), -std::sin(t), x}, {std::sin(t), std::cos(t), y}, {0.0, 0.0, 1.0}}};
    };
    const M a = make(base.x, base.y, base.theta);
    const M b = make(local.dx, local.dy, local.dtheta);
    M c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return {c[0][2], c[1][2], std::atan2(c[1][0], c[0][0])};
}

/// Forward-Euler integration of a unit-speed unicycle executing kind.
/// In-place rotations are applied instantaneously.
inline RelativePose integrate_unicycle(const PrimitiveKind& kind, double step = 1e-4) {
    double x = 0.0, y = 0.0, th = 0.0;
    double length = 0.0;
    double rate = 0.0;  // heading change per unit distance
    if (const auto* s = std::get_if<Straight>(&kind)) {
        length = s->length;
    } else if (const auto* a = std::get_if<ArcTurn>(&kind)) {
        length = a->radius * std::abs(a->dtheta);
        rate = (a->dtheta > 0 ? 1.0 : -1.0) / a->radius;
    } else {
        const auto& t = std::get<TurnThenStraight>(kind);
        th = t.dtheta;
        length = t.length;
    }
    const auto full = static_cast<std::int64_t>(std::floor(length / step));
    const double tail = length - static_cast<double>(full) * step;
    const auto advance = [&](double h) {
        x += h * std::cos(th);
        y += h * std::sin(th);
        th += h * rate;
    };
    for (std::int64_t i = 0; i < full; ++i) advance(step);
    if (tail > 0.0) advance(tail);
    return {x, y, th};
}

/// Distance from p to the square [x0, x0+cs] x [y0, y0+cs], by projecting
/// onto the square (clamp) and measuring the gap.
inline double point_square_distance(Point p, double x0, double y0, double cs) {
    const double qx = std::min(std::max(p.x, x0), x0 + cs);
    const double qy = std::min(std::max(p.y, y0), y0 + cs);
    return std::hypot(p.x - qx, p.y - qy);
}

/// is_free by scanning every obstacle cell of the map.
inline bool brute_force_free(const GridMap& map, double radius, Point p) {
    if (!(p.x >= 0.0 && p.y >= 0.0 && p.x <= map.world_width() && p.y <= map.world_height())) return false;
    const double cs = map.cell_size();
    for (int row = 0; row < map.height(); ++row) {
        for (int col = 0; col < map.width(); ++col) {
            if (map.occupied(col, row) && point_square_distance(p, col * cs, row * cs, cs) <= radius) {
                return false;
            }
        }
    }
    return true;
}

inline bool multiple_of(double angle, double step, double tol) {
    const double k = angle / step;
    return std::abs(k - std::round(k)) * step <= tol;
}

/// Random occupancy map with the given obstacle probability.
inline GridMap random_map(std::mt19937_64& rng, int w, int h, double cs, double p_obstacle) {
    std::bernoulli_distribution obstacle(p_obstacle);
    std::vector<std::uint8_t> occ(static_cast<std::size_t>(w * h));
    for (auto& c : occ) c = obstacle(rng) ? 1 : 0;
    return {w, h, cs, std::move(occ)};
}

/// Re-composes the path's primitives from its first pose, without ever
/// resetting to the stored poses. Returns the largest mismatch seen.
inline double replay_error(const std::vector<PathEntry>& path, const PrimitiveSet& set) {
    if (path.empty()) return 0.0;
    double worst = 0.0;
    Pose cur = path.front().pose;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const auto& prim = set.at(*path[i].via_primitive);
        cur = compose_matrix(cur, prim.end);
        const Pose& want = path[i].pose;
        worst = std::max({worst, std::abs(cur.x - want.x), std::abs(cur.y - want.y),
                          std::abs(std::remainder(cur.theta - want.theta, 2.0 * kPi))});
    }
    return worst;
}

}  // namespace primrrt::oracle
