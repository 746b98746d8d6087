// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include "primrrt/batch.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "primrrt/errors.hpp"

namespace primrrt {

BatchStats aggregate(std::span<const RunRecord> records) {
    BatchStats s;
    s.runs = records.size();
    double length_sum = 0.0;
    double iteration_sum = 0.0;
    for (const auto& r : records) {
        if (r.status != PlanStatus::Success) continue;
        if (s.successes == 0) {
            s.min_path_length = r.path_length;
            s.max_path_length = r.path_length;
        } else {
            s.min_path_length = std::min(s.min_path_length, r.path_length);
            s.max_path_length = std::max(s.max_path_length, r.path_length);
        }
        ++s.successes;
        length_sum += r.path_length;
        iteration_sum += static_cast<double>(r.iterations);
    }
    if (s.runs > 0) s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.runs);
    if (s.successes > 0) {
        s.mean_path_length = length_sum / static_cast<double>(s.successes);
        s.mean_iterations_to_goal = iteration_sum / static_cast<double>(s.successes);
    }
    return s;
}

BatchResult run_batch(const Workspace& ws, const PrimitiveSet& set, const RunConfig& base,
                      std::span<const std::uint64_t> seeds, unsigned threads) {
    if (seeds.empty()) {
        throw InvalidArgument("run_batch needs at least one seed");
    }
    base.planner.validate();

    BatchResult result;
    result.records.resize(seeds.size());
    const auto run_one = [&](std::size_t i) {
        RunConfig cfg = base;
        cfg.planner.rng_seed = seeds[i];
        const auto t0 = std::chrono::steady_clock::now();
        const PlanResult pr = plan(ws, set, cfg.planner);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        result.records[i] = make_record(cfg, pr, dt.count());
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, seeds.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < seeds.size(); i = next++) {
                    try {
                        run_one(i);
                    } catch (...) {
                        const std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }
    result.stats = aggregate(result.records);
    return result;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
    const auto parse = [&](std::string_view word) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
        if (word.empty() || ec != std::errc{} || ptr != word.data() + word.size()) {
            throw InvalidArgument("bad seed '" + std::string(word) + "' in '" + std::string(text) + "'");
        }
        return v;
    };
    std::vector<std::uint64_t> seeds;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        const auto lo = parse(text.substr(0, dots));
        const auto hi = parse(text.substr(dots + 2));
        if (hi < lo) throw InvalidArgument("empty seed range '" + std::string(text) + "'");
        if (hi - lo >= 10'000'000) throw InvalidArgument("seed range too large");
        for (std::uint64_t s = lo;; ++s) {
            seeds.push_back(s);
            if (s == hi) break;
        }
        return seeds;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        seeds.push_back(parse(text.substr(start, end - start)));
        start = end + 1;
    }
    return seeds;
}

nlohmann::json to_json(const BatchStats& s) {
    return {
        {"runs", s.runs},
        {"successes", s.successes},
        {"success_rate", s.success_rate},
        {"mean_path_length", s.mean_path_length},
        {"min_path_length", s.min_path_length},
        {"max_path_length", s.max_path_length},
        {"mean_iterations_to_goal", s.mean_iterations_to_goal},
    };
}

nlohmann::json to_json(const BatchResult& r) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& rec : r.records) runs.push_back(to_json(rec));
    return {{"stats", to_json(r.stats)}, {"runs", std::move(runs)}};
}

}  // namespace primrrt
