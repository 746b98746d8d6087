// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include "primrrt/planner.hpp"

#include <algorithm>
#include <string>

#include "primrrt/errors.hpp"

namespace primrrt {

std::string_view to_string(NeighborSearch s) noexcept {
    return s == NeighborSearch::KdTree ? "kdtree" : "linear";
}

std::string_view to_string(PlanStatus s) noexcept {
    return s == PlanStatus::Success ? "success" : "failure-exhausted";
}

void Tree::init(const Pose& root) {
    nodes_.clear();
    positions_.clear();
    index_.clear();
    nodes_.push_back({root, std::nullopt, std::nullopt});
    positions_.push_back(root.position());
    if (search_ == NeighborSearch::KdTree) index_.insert(root.position());
}

std::size_t Tree::extend(std::size_t parent, const Pose& pose, int via_primitive) {
    if (parent >= nodes_.size()) {
        throw StateError("extend: parent " + std::to_string(parent) + " does not exist");
    }
    nodes_.push_back({pose, parent, via_primitive});
    positions_.push_back(pose.position());
    if (search_ == NeighborSearch::KdTree) index_.insert(pose.position());
    return nodes_.size() - 1;
}

std::size_t Tree::nearest(Point p) const {
    if (nodes_.empty()) {
        throw StateError("nearest_node: tree is empty");
    }
    return search_ == NeighborSearch::KdTree ? index_.nearest(p) : linear_nearest(positions_, p);
}

Tree Tree::from_nodes(std::vector<TreeNode> nodes, NeighborSearch search) {
    Tree tree(search);
    if (nodes.empty()) return tree;
    if (nodes.front().parent || nodes.front().via_primitive) {
        throw StateError("node 0 must be the root");
    }
    tree.init(nodes.front().pose);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const auto& n = nodes[i];
        if (!n.parent || !n.via_primitive || *n.parent >= i) {
            throw StateError("node " + std::to_string(i) + " needs a parent with a smaller index and a primitive");
        }
        tree.extend(*n.parent, n.pose, *n.via_primitive);
    }
    return tree;
}

void PlannerConfig::validate() const {
    if (max_iterations < 1) throw ValidationError("max_iterations must be >= 1");
    if (!std::isfinite(goal_radius) || goal_radius <= 0.0) throw ValidationError("goal_radius must be > 0");
    if (!(goal_bias >= 0.0 && goal_bias <= 1.0)) throw ValidationError("goal_bias must be in [0, 1]");
    if (!std::isfinite(collision_resolution) || collision_resolution <= 0.0) {
        throw ValidationError("collision_resolution must be > 0");
    }
}

Point Sampler::random_point(const Workspace& ws, double goal_bias) {
    // Always draw all three numbers so the stream position does not depend
    // on the branch taken.
    const double u = unit_(rng_);
    const double x = unit_(rng_) * ws.map().world_width();
    const double y = unit_(rng_) * ws.map().world_height();
    if (goal_bias >= 1.0 || u < goal_bias) return ws.goal();
    return {x, y};
}

std::optional<Expansion> expand(const Workspace& ws, const Tree& tree, std::size_t near,
                                const PrimitiveSet& set, Point target, double resolution) {
    if (near >= tree.size()) {
        throw StateError("expand: node " + std::to_string(near) + " does not exist");
    }
    const Pose& from = tree[near].pose;
    std::optional<Expansion> best;
    double best_d2 = 0.0;
    for (const auto& prim : set) {
        const Pose to = compose(from, prim.end);
        const double d2 = squared_distance(to.position(), target);
        // Cheap distance test first; collision check only for improvements.
        if (best && !(d2 < best_d2)) continue;
        if (!trajectory_feasible(ws, from, prim, resolution)) continue;
        best = Expansion{prim.id, to};
        best_d2 = d2;
    }
    return best;
}

std::vector<PathEntry> extract_path(const Tree& tree, std::size_t goal_node) {
    if (goal_node >= tree.size()) {
        throw StateError("extract_path: node " + std::to_string(goal_node) + " does not exist");
    }
    std::vector<PathEntry> path;
    std::optional<std::size_t> cur = goal_node;
    while (cur) {
        const TreeNode& n = tree[*cur];
        path.push_back({n.pose, n.via_primitive});
        cur = n.parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

double path_length(const std::vector<PathEntry>& path, const PrimitiveSet& set) {
    double total = 0.0;
    for (const auto& e : path) {
        if (e.via_primitive) total += set.at(*e.via_primitive).arc_length;
    }
    return total;
}

PlanResult plan(const Workspace& ws, const PrimitiveSet& set, const PlannerConfig& cfg) {
    cfg.validate();

    PlanResult result;
    result.tree = Tree(cfg.neighbor_search);
    result.tree.init(ws.start());

    const auto reached = [&](const Pose& p) { return distance(p.position(), ws.goal()) <= cfg.goal_radius; };
    const auto finish = [&](std::size_t goal_node) {
        result.status = PlanStatus::Success;
        result.path = extract_path(result.tree, goal_node);
        result.stats.path_length = path_length(result.path, set);
    };

    if (reached(ws.start())) {
        finish(0);
        result.stats.node_count = result.tree.size();
        return result;
    }

    Sampler sampler(cfg.rng_seed);
    std::optional<std::size_t> goal_node;
    for (std::size_t i = 1; i <= cfg.max_iterations; ++i) {
        result.stats.iterations = i;
        const Point sample = sampler.random_point(ws, cfg.goal_bias);
        const std::size_t near = result.tree.nearest(sample);
        const auto step = expand(ws, result.tree, near, set, sample, cfg.collision_resolution);
        if (!step) {
            ++result.stats.blocked_iterations;
            continue;
        }
        const std::size_t added = result.tree.extend(near, step->pose, step->primitive);
        if (!goal_node && reached(step->pose)) {
            goal_node = added;
            if (cfg.stop_on_goal) break;
        }
    }

    if (goal_node) finish(*goal_node);
    result.stats.node_count = result.tree.size();
    return result;
}

}  // namespace primrrt
