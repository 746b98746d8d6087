// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors
//
// Motion primitives: short pre-computed feasible motions in the body frame,
// and named catalogs of them.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "primrrt/geometry.hpp"

namespace primrrt {

inline constexpr double kDefaultForwardLength = 1.0;

struct Straight {
    double length{kDefaultForwardLength};
};

/// Constant-curvature turn while moving forward. dtheta > 0 turns left.
struct ArcTurn {
    double dtheta{0.0};
    double radius{1.0};
};

/// Instantaneous in-place rotation followed by a straight segment.
struct TurnThenStraight {
    double dtheta{0.0};
    double length{kDefaultForwardLength};
};

using PrimitiveKind = std::variant<Straight, ArcTurn, TurnThenStraight>;

/// Throws InvalidArgument if the kind's parameters break its invariants.
void validate(const PrimitiveKind& kind);

/// Closed-form body-frame endpoint of the motion.
[[nodiscard]] RelativePose endpoint(const PrimitiveKind& kind);

/// Distance travelled by the robot's reference point.
[[nodiscard]] double arc_length(const PrimitiveKind& kind);

/// Signed heading change of the motion.
[[nodiscard]] double turn_angle(const PrimitiveKind& kind) noexcept;

/// Degrees to radians. Integer degree values are reduced to p/q and
/// evaluated as pi*p/q so that e.g. 45 maps to exactly pi/4.
[[nodiscard]] double degrees_to_radians(double degrees) noexcept;

struct MotionPrimitive {
    int id{0};
    std::string label;
    PrimitiveKind kind;
    RelativePose end;
    double arc_length{0.0};

    /// Validates kind and caches endpoint and arc length.
    static MotionPrimitive make(int id, std::string label, const PrimitiveKind& kind);
};

namespace detail {

[[nodiscard]] std::size_t interval_count(double arc_length, double resolution) noexcept;

}  // namespace detail

/// Calls fn(RelativePose) for every collision sample of prim, in order.
/// Same sequence as discretize(); does not allocate. Stops early when fn
/// returns false, and then returns false itself.
template <typename Fn>
bool for_each_sample(const MotionPrimitive& prim, double resolution, Fn&& fn) {
    const std::size_t n = detail::interval_count(prim.arc_length, resolution);
    const auto emit = [&](std::size_t i, const RelativePose& sample) {
        return fn(i == n ? prim.end : sample);
    };
    if (const auto* s = std::get_if<Straight>(&prim.kind)) {
        for (std::size_t i = 0; i <= n; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(n);
            if (!emit(i, {s->length * t, 0.0, 0.0})) return false;
        }
    } else if (const auto* a = std::get_if<ArcTurn>(&prim.kind)) {
        const double sign = a->dtheta > 0.0 ? 1.0 : -1.0;
        const double sweep = std::abs(a->dtheta);
        for (std::size_t i = 0; i <= n; ++i) {
            const double phi = sweep * static_cast<double>(i) / static_cast<double>(n);
            const double half = std::sin(0.5 * phi);
            const RelativePose sample{a->radius * std::sin(phi), sign * 2.0 * a->radius * half * half,
                                      normalize_angle(sign * phi)};
            if (!emit(i, sample)) return false;
        }
    } else {
        const auto& t = std::get<TurnThenStraight>(prim.kind);
        const double heading = normalize_angle(t.dtheta);
        const double c = std::cos(t.dtheta);
        const double s = std::sin(t.dtheta);
        for (std::size_t i = 0; i <= n; ++i) {
            const double d = t.length * static_cast<double>(i) / static_cast<double>(n);
            if (!emit(i, {d * c, d * s, heading})) return false;
        }
    }
    return true;
}

/// Body-frame samples at arc-length spacing <= resolution, first sample at
/// the start of travel, last sample exactly prim.end.
/// Throws InvalidArgument for non-positive resolution.
[[nodiscard]] std::vector<RelativePose> discretize(const MotionPrimitive& prim, double resolution);

class PrimitiveSet {
public:
    /// Ids are reassigned to 0..n-1 in order. Throws ValidationError if empty.
    PrimitiveSet(std::string name, std::vector<MotionPrimitive> primitives);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::span<const MotionPrimitive> primitives() const noexcept { return primitives_; }
    [[nodiscard]] std::size_t size() const noexcept { return primitives_.size(); }
    [[nodiscard]] const MotionPrimitive& operator[](std::size_t i) const { return primitives_[i]; }
    /// Throws StateError for an id outside 0..size()-1.
    [[nodiscard]] const MotionPrimitive& at(int id) const;

    [[nodiscard]] auto begin() const noexcept { return primitives_.begin(); }
    [[nodiscard]] auto end() const noexcept { return primitives_.end(); }

private:
    std::string name_;
    std::vector<MotionPrimitive> primitives_;
};

[[nodiscard]] std::span<const std::string_view> builtin_set_names() noexcept;

/// One of car1..car4, turtle1..turtle3, fig1. forward_length sets the
/// straight primitive and the turtle post-rotation travel.
/// Throws NotFound (listing valid names) for anything else.
[[nodiscard]] PrimitiveSet builtin_set(std::string_view name,
                                       double forward_length = kDefaultForwardLength);

/// Parses the line-oriented custom set format:
///
///     name <text>
///     straight <length>
///     arc <signed degrees> <radius>
///     turn <signed degrees> <length>
///
/// '#' starts a comment. Throws ParseError or ValidationError.
[[nodiscard]] PrimitiveSet load_set(std::string_view text);

}  // namespace primrrt
