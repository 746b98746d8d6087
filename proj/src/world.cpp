// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include "primrrt/world.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "primrrt/errors.hpp"

namespace primrrt {

namespace {

std::string_view strip_cr(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace

GridMap::GridMap(int width, int height, double cell_size, std::vector<std::uint8_t> occupancy,
                 std::optional<Cell> start, std::optional<Cell> goal)
    : width_(width),
      height_(height),
      cell_size_(cell_size),
      occupancy_(std::move(occupancy)),
      start_(start),
      goal_(goal) {
    if (width_ < 1 || height_ < 1) {
        throw ValidationError("map needs at least one row and one column");
    }
    if (!std::isfinite(cell_size_) || cell_size_ <= 0.0) {
        throw ValidationError("cell size must be positive");
    }
    if (occupancy_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
        throw ValidationError("occupancy size does not match width x height");
    }
    for (const auto& [marker, cell] : {std::pair{"start", start_}, std::pair{"goal", goal_}}) {
        if (cell && (!in_bounds(cell->col, cell->row) || occupied(cell->col, cell->row))) {
            throw ValidationError(std::string(marker) + " cell is out of bounds or occupied");
        }
    }
}

GridMap GridMap::empty(int width, int height, double cell_size) {
    return {width, height, cell_size,
            std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                      static_cast<std::size_t>(std::max(height, 0)))};
}

std::size_t GridMap::obstacle_count() const noexcept {
    return static_cast<std::size_t>(std::count(occupancy_.begin(), occupancy_.end(), std::uint8_t{1}));
}

GridMap parse_map(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> rows;
    std::optional<double> cell_size;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const auto raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        const auto line = strip_cr(raw);
        if (line.empty()) continue;
        if (!cell_size) {
            constexpr std::string_view kHeader = "cellsize";
            if (!line.starts_with(kHeader)) {
                throw ParseError(line_no, "expected 'cellsize <float>' header");
            }
            const auto value = strip_cr(line.substr(kHeader.size()));
            double cs = 0.0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), cs);
            if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
                throw ParseError(line_no, "bad cellsize value '" + std::string(value) + "'");
            }
            if (!std::isfinite(cs) || cs <= 0.0) {
                throw ValidationError("cellsize must be positive");
            }
            cell_size = cs;
            continue;
        }
        rows.emplace_back(line_no, line);
    }
    if (!cell_size) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'cellsize' header");
    }
    if (rows.empty()) {
        throw ParseError(line_no, "map has no grid rows");
    }

    const auto width = rows.front().second.size();
    const auto height = rows.size();
    std::vector<std::uint8_t> occupancy(width * height, 0);
    std::optional<Cell> start;
    std::optional<Cell> goal;
    for (std::size_t doc_row = 0; doc_row < height; ++doc_row) {
        const auto& [row_line, row] = rows[doc_row];
        if (row.size() != width) {
            throw ParseError(row_line, "row length " + std::to_string(row.size()) + " differs from " +
                                           std::to_string(width));
        }
        const int world_row = static_cast<int>(height - 1 - doc_row);
        for (std::size_t col = 0; col < width; ++col) {
            const Cell cell{static_cast<int>(col), world_row};
            switch (row[col]) {
                case '#':
                    occupancy[static_cast<std::size_t>(world_row) * width + col] = 1;
                    break;
                case '.':
                    break;
                case 'S':
                    if (start) throw ValidationError("map has more than one start marker 'S'");
                    start = cell;
                    break;
                case 'G':
                    if (goal) throw ValidationError("map has more than one goal marker 'G'");
                    goal = cell;
                    break;
                default:
                    throw ParseError(row_line, std::string("unexpected map character '") + row[col] + "'");
            }
        }
    }
    return {static_cast<int>(width), static_cast<int>(height), *cell_size, std::move(occupancy), start, goal};
}

GridMap load_map_file(const std::filesystem::path& path) {
    namespace fs = std::filesystem;
    fs::path resolved = path;
    if (!fs::exists(resolved) && path.is_relative()) {
        if (const char* dir = std::getenv("PRIMRRT_MAP_DIR"); dir != nullptr && *dir != '\0') {
            resolved = fs::path(dir) / path;
        }
    }
    std::ifstream in(resolved);
    if (!in) {
        throw IoError("cannot open map file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_map(buffer.str());
}

Workspace::Workspace(GridMap map, double robot_radius, Pose start, Point goal)
    : map_(std::move(map)), robot_radius_(robot_radius), start_(start), goal_(goal) {
    if (!std::isfinite(robot_radius_) || robot_radius_ < 0.0) {
        throw ValidationError("robot radius must be >= 0");
    }
    if (!is_finite(start_) || !is_finite(goal_)) {
        throw ValidationError("start and goal must be finite");
    }
    start_.theta = normalize_angle(start_.theta);
    if (!is_free(start_.position())) {
        throw ValidationError("start position is in collision at the given robot radius");
    }
    if (!is_free(goal_)) {
        throw ValidationError("goal position is in collision at the given robot radius");
    }
}

Workspace Workspace::from_markers(GridMap map, double robot_radius, double start_heading) {
    if (!map.start_cell() || !map.goal_cell()) {
        throw ValidationError("map needs both 'S' and 'G' markers");
    }
    const Point s = map.cell_center(*map.start_cell());
    const Point g = map.cell_center(*map.goal_cell());
    return {std::move(map), robot_radius, Pose{s.x, s.y, start_heading}, g};
}

double distance_to_cell(const GridMap& map, Cell c, Point p) noexcept {
    const double cs = map.cell_size();
    const double x0 = c.col * cs;
    const double y0 = c.row * cs;
    const double dx = std::max({x0 - p.x, 0.0, p.x - (x0 + cs)});
    const double dy = std::max({y0 - p.y, 0.0, p.y - (y0 + cs)});
    return std::sqrt(dx * dx + dy * dy);
}

bool Workspace::is_free(Point p) const noexcept {
    if (!is_finite(p) || p.x < 0.0 || p.y < 0.0 || p.x > map_.world_width() || p.y > map_.world_height()) {
        return false;
    }
    // Only cells overlapping the radius box can be within reach; pad by one
    // cell so rounding in floor() never drops a candidate.
    const double cs = map_.cell_size();
    const auto index = [](double v, int hi) {
        return static_cast<int>(std::clamp(std::floor(v), -1.0, static_cast<double>(hi)));
    };
    const int c0 = std::max(0, index((p.x - robot_radius_) / cs, map_.width()) - 1);
    const int c1 = std::min(map_.width() - 1, index((p.x + robot_radius_) / cs, map_.width()) + 1);
    const int r0 = std::max(0, index((p.y - robot_radius_) / cs, map_.height()) - 1);
    const int r1 = std::min(map_.height() - 1, index((p.y + robot_radius_) / cs, map_.height()) + 1);
    for (int row = r0; row <= r1; ++row) {
        for (int col = c0; col <= c1; ++col) {
            if (map_.occupied(col, row) && !(distance_to_cell(map_, {col, row}, p) > robot_radius_)) {
                return false;
            }
        }
    }
    return true;
}

bool trajectory_feasible(const Workspace& ws, const Pose& start, const MotionPrimitive& prim,
                         double resolution) {
    if (!std::isfinite(resolution) || resolution <= 0.0) {
        throw InvalidArgument("trajectory_feasible: resolution must be positive");
    }
    return for_each_sample(prim, resolution, [&](const RelativePose& s) {
        return ws.is_free(compose(start, s).position());
    });
}

}  // namespace primrrt
