// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors
//
// Run records and on-disk artifacts: dense path CSV and flat tree JSON.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "primrrt/planner.hpp"
#include "primrrt/primitives.hpp"
#include "primrrt/world.hpp"

namespace primrrt {

/// Everything needed to reproduce a run.
struct RunConfig {
    std::string map_path;
    std::string set_name;
    double robot_radius{kDefaultRobotRadius};
    double start_heading{0.0};
    double forward_length{kDefaultForwardLength};
    PlannerConfig planner;
};

struct RunRecord {
    RunConfig config;
    PlanStatus status{PlanStatus::FailureExhausted};
    double path_length{0.0};
    std::size_t node_count{0};
    std::size_t iterations{0};
    double wall_time_s{0.0};
};

[[nodiscard]] RunRecord make_record(const RunConfig& config, const PlanResult& result, double wall_time_s);

/// One-line human summary.
[[nodiscard]] std::string summary_line(const RunRecord& record);

[[nodiscard]] nlohmann::json to_json(const RunConfig& config);
[[nodiscard]] RunConfig run_config_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json to_json(const RunRecord& record);

/// Dense world-frame trajectory, header "x,y,theta". Consecutive duplicate
/// samples at edge joints are dropped. Throws StateError on an empty path.
[[nodiscard]] std::string write_path_csv(const std::vector<PathEntry>& path, const PrimitiveSet& set,
                                         double resolution);

/// Parses a document produced by write_path_csv. Throws ParseError.
[[nodiscard]] std::vector<Pose> parse_path_csv(std::string_view text);

/// {"config": {...}, "status": ..., "nodes": [{"pose":[x,y,theta], "parent": i|null, "prim": id|null}]}
[[nodiscard]] std::string write_tree_json(const Tree& tree, const RunConfig& config, PlanStatus status);

struct LoadedTree {
    Tree tree;
    RunConfig config;
};

/// Throws ParseError for malformed JSON, StateError for a malformed tree.
[[nodiscard]] LoadedTree read_tree_json(std::string_view text);

/// Reads a whole file. Throws IoError.
[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
/// Writes (truncating) a whole file. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace primrrt
