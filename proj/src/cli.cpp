// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include "primrrt/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

#include "primrrt/batch.hpp"
#include "primrrt/errors.hpp"
#include "primrrt/io.hpp"
#include "primrrt/svg.hpp"

namespace primrrt {

namespace {

struct PlanFlags {
    std::string map;
    std::string set;
    std::string set_file;
    std::uint64_t seed{0};
    std::size_t iterations{20000};
    double goal_radius{0.5};
    double goal_bias{0.05};
    double resolution{kDefaultCollisionResolution};
    double robot_radius{kDefaultRobotRadius};
    double start_heading{0.0};
    double forward_length{kDefaultForwardLength};
    bool no_stop_on_goal{false};
    bool linear_nn{false};
};

void add_plan_flags(CLI::App& cmd, PlanFlags& f, bool with_seed) {
    cmd.add_option("--map", f.map, "Map document (also searched in $PRIMRRT_MAP_DIR)")->required();
    auto* set = cmd.add_option("--set", f.set, "Builtin primitive set name");
    auto* set_file = cmd.add_option("--set-file", f.set_file, "Custom primitive set document");
    set->excludes(set_file);
    if (with_seed) cmd.add_option("--seed", f.seed, "RNG seed")->capture_default_str();
    cmd.add_option("--iterations", f.iterations, "Iteration budget K")->capture_default_str();
    cmd.add_option("--goal-radius", f.goal_radius, "Goal disc radius")->capture_default_str();
    cmd.add_option("--goal-bias", f.goal_bias, "Probability of sampling the goal")->capture_default_str();
    cmd.add_option("--resolution", f.resolution, "Collision sample spacing")->capture_default_str();
    cmd.add_option("--robot-radius", f.robot_radius, "Obstacle inflation radius")->capture_default_str();
    cmd.add_option("--start-heading", f.start_heading, "Start heading in radians")->capture_default_str();
    cmd.add_option("--forward-length", f.forward_length, "Straight primitive length for builtin sets")
        ->capture_default_str();
    cmd.add_flag("--no-stop-on-goal", f.no_stop_on_goal, "Keep growing the tree after reaching the goal");
    cmd.add_flag("--linear-nn", f.linear_nn, "Use a linear scan for nearest-node lookup");
}

struct Problem {
    Workspace ws;
    PrimitiveSet set;
    RunConfig config;
};

Problem load_problem(const PlanFlags& f) {
    if (f.set.empty() && f.set_file.empty()) {
        throw InvalidArgument("one of --set or --set-file is required");
    }
    RunConfig cfg;
    cfg.map_path = f.map;
    cfg.robot_radius = f.robot_radius;
    cfg.start_heading = f.start_heading;
    cfg.forward_length = f.forward_length;
    cfg.planner.max_iterations = f.iterations;
    cfg.planner.goal_radius = f.goal_radius;
    cfg.planner.goal_bias = f.goal_bias;
    cfg.planner.collision_resolution = f.resolution;
    cfg.planner.rng_seed = f.seed;
    cfg.planner.stop_on_goal = !f.no_stop_on_goal;
    cfg.planner.neighbor_search = f.linear_nn ? NeighborSearch::LinearScan : NeighborSearch::KdTree;
    cfg.planner.validate();

    PrimitiveSet set = f.set_file.empty() ? builtin_set(f.set, f.forward_length)
                                          : load_set(read_text_file(f.set_file));
    cfg.set_name = f.set_file.empty() ? set.name() : "file:" + f.set_file;
    Workspace ws = Workspace::from_markers(load_map_file(f.map), f.robot_radius, f.start_heading);
    return {std::move(ws), std::move(set), std::move(cfg)};
}

int cmd_plan(const PlanFlags& f, const std::string& out_csv, const std::string& tree_json,
             const std::string& svg_path, std::ostream& out) {
    const Problem p = load_problem(f);
    const auto t0 = std::chrono::steady_clock::now();
    const PlanResult result = plan(p.ws, p.set, p.config.planner);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    const RunRecord record = make_record(p.config, result, dt.count());

    const bool ok = result.status == PlanStatus::Success;
    if (ok && !out_csv.empty()) {
        write_text_file(out_csv, write_path_csv(result.path, p.set, p.config.planner.collision_resolution));
    }
    if (!tree_json.empty()) {
        write_text_file(tree_json, write_tree_json(result.tree, p.config, result.status));
    }
    if (!svg_path.empty()) {
        SvgOptions opts;
        opts.goal_radius = p.config.planner.goal_radius;
        std::optional<std::vector<PathEntry>> path;
        if (ok) path = result.path;
        write_text_file(svg_path, render_svg(p.ws, result.tree, path, p.set, opts));
    }
    out << summary_line(record) << '\n';
    return ok ? kExitSuccess : kExitPlanFailure;
}

int cmd_batch(const PlanFlags& f, const std::string& seeds_text, unsigned threads, const std::string& report,
              std::ostream& out) {
    const auto seeds = parse_seed_list(seeds_text);
    const Problem p = load_problem(f);
    const BatchResult result = run_batch(p.ws, p.set, p.config, seeds, threads);
    for (const auto& r : result.records) out << summary_line(r) << '\n';
    const auto& s = result.stats;
    out << "runs=" << s.runs << " successes=" << s.successes << " success_rate=" << s.success_rate
        << " mean_path_length=" << s.mean_path_length << " mean_iterations_to_goal=" << s.mean_iterations_to_goal
        << '\n';
    if (!report.empty()) write_text_file(report, to_json(result).dump(2) + "\n");
    return s.successes > 0 ? kExitSuccess : kExitPlanFailure;
}

int cmd_primitives_list(std::ostream& out) {
    for (const auto name : builtin_set_names()) {
        out << name << '\t' << builtin_set(name).size() << " primitives\n";
    }
    return kExitSuccess;
}

int cmd_primitives_show(const std::string& name, double forward_length, const std::string& svg_path,
                        std::ostream& out) {
    const PrimitiveSet set = builtin_set(name, forward_length);
    out << "set " << set.name() << '\n';
    out << "id\tlabel\tarc_length\tend_dx\tend_dy\tend_dtheta\n";
    for (const auto& p : set) {
        out << p.id << '\t' << p.label << '\t' << p.arc_length << '\t' << p.end.dx << '\t' << p.end.dy << '\t'
            << p.end.dtheta << '\n';
    }
    if (!svg_path.empty()) write_text_file(svg_path, render_fan_svg(set));
    return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Motion-primitive RRT planner", "primrrt"};
    app.require_subcommand(1);

    PlanFlags plan_flags;
    std::string out_csv;
    std::string tree_json;
    std::string svg_path;
    auto* plan_cmd = app.add_subcommand("plan", "Plan one path");
    add_plan_flags(*plan_cmd, plan_flags, true);
    plan_cmd->add_option("--out", out_csv, "Dense path CSV (written on success)");
    plan_cmd->add_option("--tree", tree_json, "Tree JSON (always written)");
    plan_cmd->add_option("--svg", svg_path, "SVG rendering");

    PlanFlags batch_flags;
    std::string seeds_text;
    std::string report;
    unsigned threads = 0;
    auto* batch_cmd = app.add_subcommand("batch", "Run one plan per seed and aggregate");
    add_plan_flags(*batch_cmd, batch_flags, false);
    batch_cmd->add_option("--seeds", seeds_text, "Seed range a..b or list a,b,c")->required();
    batch_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
    batch_cmd->add_option("--report", report, "Batch statistics JSON");

    auto* prims_cmd = app.add_subcommand("primitives", "Inspect builtin primitive sets");
    prims_cmd->require_subcommand(1);
    auto* list_cmd = prims_cmd->add_subcommand("list", "List builtin sets");
    std::string show_name;
    std::string fan_svg;
    double show_forward = kDefaultForwardLength;
    auto* show_cmd = prims_cmd->add_subcommand("show", "Print one set's primitives");
    show_cmd->add_option("name", show_name, "Set name")->required();
    show_cmd->add_option("--svg", fan_svg, "Write the primitive fan as SVG");
    show_cmd->add_option("--forward-length", show_forward, "Straight primitive length")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    try {
        if (plan_cmd->parsed()) return cmd_plan(plan_flags, out_csv, tree_json, svg_path, out);
        if (batch_cmd->parsed()) return cmd_batch(batch_flags, seeds_text, threads, report, out);
        if (list_cmd->parsed()) return cmd_primitives_list(out);
        if (show_cmd->parsed()) return cmd_primitives_show(show_name, show_forward, fan_svg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace primrrt
