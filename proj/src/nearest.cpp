// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include "primrrt/nearest.hpp"

#include "primrrt/errors.hpp"

namespace primrrt {

namespace {

double coord(Point p, std::uint8_t axis) noexcept { return axis == 0 ? p.x : p.y; }

}  // namespace

std::size_t linear_nearest(std::span<const Point> points, Point q) {
    if (points.empty()) {
        throw StateError("nearest-neighbour query on an empty point set");
    }
    std::size_t best = 0;
    double best_d2 = squared_distance(points[0], q);
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double d2 = squared_distance(points[i], q);
        if (d2 < best_d2) {
            best = i;
            best_d2 = d2;
        }
    }
    return best;
}

void KdIndex::insert(Point p) {
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    if (nodes_.empty()) {
        nodes_.push_back({p, {kNone, kNone}, 0});
        return;
    }
    std::uint32_t cur = 0;
    for (;;) {
        Node& n = nodes_[cur];
        const int side = coord(p, n.axis) < coord(n.p, n.axis) ? 0 : 1;
        if (n.child[side] == kNone) {
            n.child[side] = id;
            const auto axis = static_cast<std::uint8_t>(1 - n.axis);
            nodes_.push_back({p, {kNone, kNone}, axis});
            return;
        }
        cur = n.child[side];
    }
}

std::size_t KdIndex::nearest(Point q) const {
    if (nodes_.empty()) {
        throw StateError("nearest-neighbour query on an empty index");
    }
    std::uint32_t best = 0;
    double best_d2 = squared_distance(nodes_[0].p, q);

    // Explicit stack of (node, lower bound on squared distance to its subtree).
    struct Frame {
        std::uint32_t node;
        double bound;
    };
    std::vector<Frame> stack;
    stack.reserve(64);
    stack.push_back({0, 0.0});
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        // Equal bounds still have to be visited: a tie may carry a smaller id.
        if (f.bound > best_d2) continue;
        const Node& n = nodes_[f.node];
        const double d2 = squared_distance(n.p, q);
        if (d2 < best_d2 || (d2 == best_d2 && f.node < best)) {
            best = f.node;
            best_d2 = d2;
        }
        const double diff = coord(q, n.axis) - coord(n.p, n.axis);
        const int near_side = diff < 0.0 ? 0 : 1;
        const std::uint32_t far = n.child[1 - near_side];
        const std::uint32_t near = n.child[near_side];
        if (far != kNone) stack.push_back({far, std::max(f.bound, diff * diff)});
        if (near != kNone) stack.push_back({near, f.bound});
    }
    return best;
}

}  // namespace primrrt
