// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primrrt/planner.hpp"
#include "primrrt/primitives.hpp"
#include "primrrt/world.hpp"

namespace primrrt {

struct SvgOptions {
    double pixels_per_unit{30.0};
    double sample_resolution{0.1};  // spacing of polyline vertices along primitives
    double goal_radius{0.5};
    bool draw_fan{true};
};

/// Layered map rendering, one <g> per layer, in this order: "obstacles",
/// "inflation", "tree" (one polyline per edge), "path", "markers",
/// "primitive-fan" (every primitive drawn from one pose in a corner inset).
/// Contents use world coordinates under a y-up flip transform.
[[nodiscard]] std::string render_svg(const Workspace& ws, const Tree& tree,
                                     const std::optional<std::vector<PathEntry>>& path,
                                     const PrimitiveSet& set, const SvgOptions& options = {});

/// Just the primitive fan of a set.
[[nodiscard]] std::string render_fan_svg(const PrimitiveSet& set, double pixels = 300.0);

}  // namespace primrrt
