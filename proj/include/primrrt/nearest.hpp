// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors
//
// Exact 2-D nearest-neighbour lookup for growing point sets.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "primrrt/geometry.hpp"

namespace primrrt {

/// Index of the point closest to q; ties go to the smallest index.
/// Throws StateError on an empty span.
[[nodiscard]] std::size_t linear_nearest(std::span<const Point> points, Point q);

/// Incremental kd-tree over points identified by insertion order. Queries
/// return exactly what linear_nearest() would, tie-break included.
class KdIndex {
public:
    /// Adds p with id size().
    void insert(Point p);

    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] bool empty() const noexcept { return nodes_.empty(); }
    [[nodiscard]] Point point(std::size_t id) const noexcept { return nodes_[id].p; }

    /// Throws StateError when empty.
    [[nodiscard]] std::size_t nearest(Point q) const;

    void clear() noexcept { nodes_.clear(); }

private:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    struct Node {
        Point p;
        std::uint32_t child[2]{kNone, kNone};
        std::uint8_t axis{0};
    };

    std::vector<Node> nodes_;
};

}  // namespace primrrt
