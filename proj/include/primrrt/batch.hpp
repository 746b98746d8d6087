// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors
//
// Multi-seed benchmark runs over one workspace and primitive set.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "primrrt/io.hpp"
#include "primrrt/planner.hpp"

namespace primrrt {

struct BatchStats {
    std::size_t runs{0};
    std::size_t successes{0};
    double success_rate{0.0};
    // Over successful runs only; zero when there are none.
    double mean_path_length{0.0};
    double min_path_length{0.0};
    double max_path_length{0.0};
    double mean_iterations_to_goal{0.0};

    friend bool operator==(const BatchStats&, const BatchStats&) = default;
};

struct BatchResult {
    BatchStats stats;
    std::vector<RunRecord> records;  // seed order
};

/// Folds records in the given order.
[[nodiscard]] BatchStats aggregate(std::span<const RunRecord> records);

/// One plan() per seed, each with base.planner.rng_seed replaced.
/// threads == 0 uses the hardware concurrency. Records come back in seed
/// order whatever the schedule. Config errors are raised before any run.
[[nodiscard]] BatchResult run_batch(const Workspace& ws, const PrimitiveSet& set, const RunConfig& base,
                                    std::span<const std::uint64_t> seeds, unsigned threads = 0);

/// "a..b" (inclusive) or a comma list such as "1,5,9". Throws InvalidArgument.
[[nodiscard]] std::vector<std::uint64_t> parse_seed_list(std::string_view text);

[[nodiscard]] nlohmann::json to_json(const BatchStats& stats);
[[nodiscard]] nlohmann::json to_json(const BatchResult& result);

}  // namespace primrrt
