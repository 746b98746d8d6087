// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors
//
// RRT whose edges are motion primitives. Each iteration samples a point,
// finds the nearest tree node by position, applies every collision-free
// primitive from that node and keeps the endpoint closest to the sample.
// Every edge is a primitive, so extracted paths need no smoothing.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "primrrt/geometry.hpp"
#include "primrrt/nearest.hpp"
#include "primrrt/primitives.hpp"
#include "primrrt/world.hpp"

namespace primrrt {

struct TreeNode {
    Pose pose;
    std::optional<std::size_t> parent;  // none for the root
    std::optional<int> via_primitive;   // none for the root
};

enum class NeighborSearch { KdTree, LinearScan };

[[nodiscard]] std::string_view to_string(NeighborSearch s) noexcept;

/// Search tree. Nodes are appended in creation order, so parent < child.
class Tree {
public:
    explicit Tree(NeighborSearch search = NeighborSearch::KdTree) : search_(search) {}

    /// Clears the tree and inserts the root.
    void init(const Pose& root);

    /// Appends a child and returns its index. Throws StateError if parent
    /// does not exist.
    std::size_t extend(std::size_t parent, const Pose& pose, int via_primitive);

    /// Node closest to p by position. Throws StateError on an empty tree.
    [[nodiscard]] std::size_t nearest(Point p) const;

    [[nodiscard]] const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const TreeNode& operator[](std::size_t i) const { return nodes_[i]; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }
    [[nodiscard]] NeighborSearch search() const noexcept { return search_; }

    /// Rebuilds a tree from a flat node list (e.g. a reloaded JSON dump).
    /// Checks root/parent-order structure only. Throws StateError.
    static Tree from_nodes(std::vector<TreeNode> nodes, NeighborSearch search = NeighborSearch::KdTree);

private:
    NeighborSearch search_;
    std::vector<TreeNode> nodes_;
    std::vector<Point> positions_;
    KdIndex index_;
};

/// nearest_node(tree, p) from the planning loop.
[[nodiscard]] inline std::size_t nearest_node(const Tree& tree, Point p) { return tree.nearest(p); }

struct PlannerConfig {
    std::size_t max_iterations{20000};
    double goal_radius{0.5};
    double goal_bias{0.05};
    double collision_resolution{kDefaultCollisionResolution};
    std::uint64_t rng_seed{0};
    bool stop_on_goal{true};
    NeighborSearch neighbor_search{NeighborSearch::KdTree};

    /// Throws ValidationError.
    void validate() const;
};

/// Seeded sample source; one per planning run.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// The goal with probability goal_bias, otherwise uniform over the map
    /// rectangle (obstacles included).
    [[nodiscard]] Point random_point(const Workspace& ws, double goal_bias);

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

struct Expansion {
    int primitive;
    Pose pose;
};

/// Best feasible primitive from tree[near] towards target: smallest endpoint
/// distance, ties to the smallest id. nullopt when nothing is feasible.
[[nodiscard]] std::optional<Expansion> expand(const Workspace& ws, const Tree& tree, std::size_t near,
                                              const PrimitiveSet& set, Point target, double resolution);

struct PathEntry {
    Pose pose;
    std::optional<int> via_primitive;  // none for the start
};

/// Root-first chain ending at goal_node. Throws StateError for a bad index.
[[nodiscard]] std::vector<PathEntry> extract_path(const Tree& tree, std::size_t goal_node);

/// Sum of the via primitives' arc lengths.
[[nodiscard]] double path_length(const std::vector<PathEntry>& path, const PrimitiveSet& set);

enum class PlanStatus { Success, FailureExhausted };

[[nodiscard]] std::string_view to_string(PlanStatus s) noexcept;

struct PlanStats {
    std::size_t iterations{0};
    std::size_t node_count{0};
    double path_length{0.0};
    std::size_t blocked_iterations{0};  // no feasible primitive
};

struct PlanResult {
    PlanStatus status{PlanStatus::FailureExhausted};
    std::vector<PathEntry> path;
    Tree tree;
    PlanStats stats;
};

/// Runs up to cfg.max_iterations of sample / nearest / expand / extend.
/// Deterministic for a given (workspace, set, cfg). Throws ValidationError
/// for a bad config before iterating.
[[nodiscard]] PlanResult plan(const Workspace& ws, const PrimitiveSet& set, const PlannerConfig& cfg);

}  // namespace primrrt
