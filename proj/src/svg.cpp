// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include "primrrt/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace primrrt {

namespace {

std::string num(double v) {
    if (!std::isfinite(v)) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    std::string s = buf;
    // Trim trailing zeros; keeps documents small for big trees.
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

void polyline(std::ostream& os, const std::vector<Point>& pts, const char* attrs) {
    os << "<polyline " << attrs << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) os << ' ';
        os << num(pts[i].x) << ',' << num(pts[i].y);
    }
    os << "\"/>\n";
}

std::vector<Point> edge_points(const Pose& from, const MotionPrimitive& prim, double resolution) {
    std::vector<Point> pts;
    for_each_sample(prim, resolution, [&](const RelativePose& s) {
        const Point p = compose(from, s).position();
        if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
        return true;
    });
    // An in-place turn followed by a straight collapses to two points; a
    // lone point still needs a second vertex to be a visible polyline.
    if (pts.size() == 1) pts.push_back(pts.front());
    return pts;
}

struct Bounds {
    double xmin{0}, xmax{0}, ymin{0}, ymax{0};
};

Bounds fan_bounds(const PrimitiveSet& set, double resolution) {
    Bounds b;
    for (const auto& prim : set) {
        for_each_sample(prim, resolution, [&](const RelativePose& s) {
            b.xmin = std::min(b.xmin, s.dx);
            b.xmax = std::max(b.xmax, s.dx);
            b.ymin = std::min(b.ymin, s.dy);
            b.ymax = std::max(b.ymax, s.dy);
            return true;
        });
    }
    return b;
}

// Fan polylines in body-frame coordinates; the caller positions the group.
void fan_polylines(std::ostream& os, const PrimitiveSet& set, double resolution, double stroke) {
    const std::string attrs = "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"" + num(stroke) + "\"";
    for (const auto& prim : set) {
        os << "<!-- " << xml_escape(prim.label) << " -->\n";
        polyline(os, edge_points(Pose{}, prim, resolution), attrs.c_str());
    }
}

}  // namespace

std::string render_svg(const Workspace& ws, const Tree& tree, const std::optional<std::vector<PathEntry>>& path,
                       const PrimitiveSet& set, const SvgOptions& options) {
    const GridMap& map = ws.map();
    const double w = map.world_width();
    const double h = map.world_height();
    const double s = options.pixels_per_unit;
    const double cs = map.cell_size();
    const double r = ws.robot_radius();
    const double line = std::max(w, h) / 400.0;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w * s) << "\" height=\"" << num(h * s)
       << "\" viewBox=\"0 0 " << num(w * s) << ' ' << num(h * s) << "\">\n";
    os << "<title>" << xml_escape(set.name()) << "</title>\n";
    os << "<g id=\"world\" transform=\"translate(0," << num(h * s) << ") scale(" << num(s) << ',' << num(-s)
       << ")\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << num(w) << "\" height=\"" << num(h)
       << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"" << num(line) << "\"/>\n";

    os << "<g id=\"obstacles\" fill=\"#404040\">\n";
    for (int row = 0; row < map.height(); ++row) {
        for (int col = 0; col < map.width(); ++col) {
            if (!map.occupied(col, row)) continue;
            os << "<rect x=\"" << num(col * cs) << "\" y=\"" << num(row * cs) << "\" width=\"" << num(cs)
               << "\" height=\"" << num(cs) << "\"/>\n";
        }
    }
    os << "</g>\n";

    // Outline of the inflated region, drawn only around obstacle cells that
    // border free space.
    os << "<g id=\"inflation\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" << num(line)
       << "\" stroke-dasharray=\"" << num(4 * line) << ',' << num(2 * line) << "\">\n";
    if (r > 0.0) {
        for (int row = 0; row < map.height(); ++row) {
            for (int col = 0; col < map.width(); ++col) {
                if (!map.occupied(col, row)) continue;
                const bool border = (map.in_bounds(col - 1, row) && !map.occupied(col - 1, row)) ||
                                    (map.in_bounds(col + 1, row) && !map.occupied(col + 1, row)) ||
                                    (map.in_bounds(col, row - 1) && !map.occupied(col, row - 1)) ||
                                    (map.in_bounds(col, row + 1) && !map.occupied(col, row + 1));
                if (!border) continue;
                os << "<rect x=\"" << num(col * cs - r) << "\" y=\"" << num(row * cs - r) << "\" width=\""
                   << num(cs + 2 * r) << "\" height=\"" << num(cs + 2 * r) << "\" rx=\"" << num(r) << "\" ry=\""
                   << num(r) << "\"/>\n";
            }
        }
    }
    os << "</g>\n";

    const std::string tree_attrs = "fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"" + num(line) + "\"";
    os << "<g id=\"tree\">\n";
    for (const auto& node : tree.nodes()) {
        if (!node.parent || !node.via_primitive) continue;
        polyline(os, edge_points(tree[*node.parent].pose, set.at(*node.via_primitive), options.sample_resolution),
                 tree_attrs.c_str());
    }
    os << "</g>\n";

    os << "<g id=\"path\">\n";
    if (path && !path->empty()) {
        std::vector<Point> pts{path->front().pose.position()};
        for (std::size_t i = 1; i < path->size(); ++i) {
            const auto& e = (*path)[i];
            if (!e.via_primitive) continue;
            for (const Point& p : edge_points((*path)[i - 1].pose, set.at(*e.via_primitive), options.sample_resolution)) {
                if (!(pts.back() == p)) pts.push_back(p);
            }
        }
        if (pts.size() == 1) pts.push_back(pts.front());
        const std::string attrs = "fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"" + num(4 * line) +
                                  "\" stroke-linejoin=\"round\"";
        polyline(os, pts, attrs.c_str());
    }
    os << "</g>\n";

    const Pose& start = ws.start();
    os << "<g id=\"markers\">\n";
    os << "<circle cx=\"" << num(start.x) << "\" cy=\"" << num(start.y) << "\" r=\"" << num(std::max(r, 2 * line))
       << "\" fill=\"#1f77b4\" fill-opacity=\"0.6\"/>\n";
    os << "<line x1=\"" << num(start.x) << "\" y1=\"" << num(start.y) << "\" x2=\""
       << num(start.x + std::cos(start.theta) * std::max(r, 0.5) * 1.5) << "\" y2=\""
       << num(start.y + std::sin(start.theta) * std::max(r, 0.5) * 1.5) << "\" stroke=\"#1f77b4\" stroke-width=\""
       << num(2 * line) << "\"/>\n";
    os << "<circle cx=\"" << num(ws.goal().x) << "\" cy=\"" << num(ws.goal().y) << "\" r=\""
       << num(options.goal_radius) << "\" fill=\"#9467bd\" fill-opacity=\"0.6\"/>\n";
    os << "</g>\n";

    if (options.draw_fan) {
        // Inset square in the top-left corner, a quarter of the short side.
        const double box = 0.25 * std::min(w, h);
        const Bounds b = fan_bounds(set, options.sample_resolution);
        const double extent = std::max({b.xmax - b.xmin, b.ymax - b.ymin, 1e-9});
        const double k = 0.8 * box / extent;
        const double ox = 0.1 * box - k * b.xmin;
        const double oy = h - box + 0.1 * box - k * b.ymin + 0.5 * (0.8 * box - k * (b.ymax - b.ymin));
        os << "<g id=\"primitive-fan\">\n";
        os << "<rect x=\"0\" y=\"" << num(h - box) << "\" width=\"" << num(box) << "\" height=\"" << num(box)
           << "\" fill=\"#ffffff\" fill-opacity=\"0.9\" stroke=\"#000000\" stroke-width=\"" << num(line) << "\"/>\n";
        os << "<g transform=\"translate(" << num(ox) << ',' << num(oy) << ") scale(" << num(k) << ")\">\n";
        fan_polylines(os, set, options.sample_resolution, 2 * line / k);
        os << "</g>\n</g>\n";
    }

    os << "</g>\n</svg>\n";
    return os.str();
}

std::string render_fan_svg(const PrimitiveSet& set, double pixels) {
    constexpr double kResolution = 0.02;
    const Bounds b = fan_bounds(set, kResolution);
    const double extent = std::max({b.xmax - b.xmin, b.ymax - b.ymin, 1e-9});
    const double k = 0.8 * pixels / extent;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(pixels) << "\" height=\"" << num(pixels)
       << "\" viewBox=\"0 0 " << num(pixels) << ' ' << num(pixels) << "\">\n";
    os << "<title>" << xml_escape(set.name()) << "</title>\n";
    const double ox = 0.1 * pixels - k * b.xmin;
    const double oy = 0.1 * pixels + k * b.ymax + 0.5 * (0.8 * pixels - k * (b.ymax - b.ymin));
    os << "<g id=\"primitive-fan\" transform=\"translate(" << num(ox) << ',' << num(oy) << ") scale(" << num(k)
       << ',' << num(-k) << ")\">\n";
    fan_polylines(os, set, kResolution, 2.0 / k);
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace primrrt
