// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors
//
// Occupancy-grid mazes and inflated point collision queries. The robot is a
// disc; instead of rasterizing an inflated grid, a point is free when its
// exact distance to every obstacle cell square exceeds the robot radius.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primrrt/geometry.hpp"
#include "primrrt/primitives.hpp"

namespace primrrt {

inline constexpr double kDefaultRobotRadius = 0.5;
inline constexpr double kDefaultCollisionResolution = 0.05;

/// Grid cell; row 0 is the bottom row in world coordinates.
struct Cell {
    int col{0};
    int row{0};

    friend bool operator==(const Cell&, const Cell&) = default;
};

class GridMap {
public:
    /// Throws ValidationError on bad dimensions, or if a marker is out of
    /// bounds or sits on an obstacle.
    GridMap(int width, int height, double cell_size, std::vector<std::uint8_t> occupancy,
            std::optional<Cell> start = std::nullopt, std::optional<Cell> goal = std::nullopt);

    /// All-free map.
    static GridMap empty(int width, int height, double cell_size = 1.0);

    [[nodiscard]] int width() const noexcept { return width_; }
    [[nodiscard]] int height() const noexcept { return height_; }
    [[nodiscard]] double cell_size() const noexcept { return cell_size_; }
    [[nodiscard]] double world_width() const noexcept { return width_ * cell_size_; }
    [[nodiscard]] double world_height() const noexcept { return height_ * cell_size_; }
    [[nodiscard]] const std::optional<Cell>& start_cell() const noexcept { return start_; }
    [[nodiscard]] const std::optional<Cell>& goal_cell() const noexcept { return goal_; }

    [[nodiscard]] bool in_bounds(int col, int row) const noexcept {
        return col >= 0 && row >= 0 && col < width_ && row < height_;
    }
    /// Out-of-bounds cells read as occupied.
    [[nodiscard]] bool occupied(int col, int row) const noexcept {
        return !in_bounds(col, row) ||
               occupancy_[static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
                          static_cast<std::size_t>(col)] != 0;
    }
    [[nodiscard]] Point cell_center(Cell c) const noexcept {
        return {(c.col + 0.5) * cell_size_, (c.row + 0.5) * cell_size_};
    }
    [[nodiscard]] std::size_t obstacle_count() const noexcept;

private:
    int width_;
    int height_;
    double cell_size_;
    std::vector<std::uint8_t> occupancy_;
    std::optional<Cell> start_;
    std::optional<Cell> goal_;
};

/// Map document: "cellsize <float>" then equal-length rows over {#,.,S,G},
/// first row topmost. Throws ParseError or ValidationError.
[[nodiscard]] GridMap parse_map(std::string_view text);

/// Reads and parses a map file. A relative path that does not exist is also
/// looked up in $PRIMRRT_MAP_DIR. Throws IoError if neither exists.
[[nodiscard]] GridMap load_map_file(const std::filesystem::path& path);

/// Map, robot radius and start/goal: the obstacle side of a planning query.
class Workspace {
public:
    /// Throws ValidationError if the radius is negative or start/goal collide.
    Workspace(GridMap map, double robot_radius, Pose start, Point goal);

    /// Start and goal taken from the S/G map markers (cell centers).
    /// Throws ValidationError if either marker is missing.
    static Workspace from_markers(GridMap map, double robot_radius = kDefaultRobotRadius,
                                  double start_heading = 0.0);

    [[nodiscard]] const GridMap& map() const noexcept { return map_; }
    [[nodiscard]] double robot_radius() const noexcept { return robot_radius_; }
    [[nodiscard]] const Pose& start() const noexcept { return start_; }
    [[nodiscard]] const Point& goal() const noexcept { return goal_; }

    /// Inside map bounds and strictly farther than robot_radius from every
    /// obstacle cell square.
    [[nodiscard]] bool is_free(Point p) const noexcept;

private:
    GridMap map_;
    double robot_radius_;
    Pose start_;
    Point goal_;
};

/// Distance from p to the closed square covered by a cell (0 inside).
[[nodiscard]] double distance_to_cell(const GridMap& map, Cell c, Point p) noexcept;

/// Every sample of prim composed onto start, endpoint included, is free.
/// Approximate between samples: exact only up to the resolution.
[[nodiscard]] bool trajectory_feasible(const Workspace& ws, const Pose& start,
                                       const MotionPrimitive& prim, double resolution);

}  // namespace primrrt
