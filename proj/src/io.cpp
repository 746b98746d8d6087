// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include "primrrt/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "primrrt/errors.hpp"

namespace primrrt {

using nlohmann::json;

RunRecord make_record(const RunConfig& config, const PlanResult& result, double wall_time_s) {
    return {config,
            result.status,
            result.stats.path_length,
            result.stats.node_count,
            result.stats.iterations,
            wall_time_s};
}

std::string summary_line(const RunRecord& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "status=%s set=%s seed=%llu iterations=%zu nodes=%zu path_length=%.4f time=%.4fs",
                  std::string(to_string(r.status)).c_str(), r.config.set_name.c_str(),
                  static_cast<unsigned long long>(r.config.planner.rng_seed), r.iterations, r.node_count,
                  r.path_length, r.wall_time_s);
    return buf;
}

json to_json(const RunConfig& c) {
    return {
        {"map", c.map_path},
        {"set", c.set_name},
        {"robot_radius", c.robot_radius},
        {"start_heading", c.start_heading},
        {"forward_length", c.forward_length},
        {"max_iterations", c.planner.max_iterations},
        {"goal_radius", c.planner.goal_radius},
        {"goal_bias", c.planner.goal_bias},
        {"collision_resolution", c.planner.collision_resolution},
        {"seed", c.planner.rng_seed},
        {"stop_on_goal", c.planner.stop_on_goal},
        {"neighbor_search", std::string(to_string(c.planner.neighbor_search))},
    };
}

RunConfig run_config_from_json(const json& j) {
    RunConfig c;
    c.map_path = j.at("map").get<std::string>();
    c.set_name = j.at("set").get<std::string>();
    c.robot_radius = j.at("robot_radius").get<double>();
    c.start_heading = j.at("start_heading").get<double>();
    c.forward_length = j.at("forward_length").get<double>();
    c.planner.max_iterations = j.at("max_iterations").get<std::size_t>();
    c.planner.goal_radius = j.at("goal_radius").get<double>();
    c.planner.goal_bias = j.at("goal_bias").get<double>();
    c.planner.collision_resolution = j.at("collision_resolution").get<double>();
    c.planner.rng_seed = j.at("seed").get<std::uint64_t>();
    c.planner.stop_on_goal = j.at("stop_on_goal").get<bool>();
    c.planner.neighbor_search =
        j.value("neighbor_search", std::string("kdtree")) == "linear" ? NeighborSearch::LinearScan
                                                                      : NeighborSearch::KdTree;
    return c;
}

json to_json(const RunRecord& r) {
    return {
        {"config", to_json(r.config)},
        {"status", std::string(to_string(r.status))},
        {"path_length", r.path_length},
        {"node_count", r.node_count},
        {"iterations", r.iterations},
        {"wall_time_s", r.wall_time_s},
    };
}

std::string write_path_csv(const std::vector<PathEntry>& path, const PrimitiveSet& set, double resolution) {
    if (path.empty()) {
        throw StateError("write_path_csv: empty path");
    }
    std::vector<Pose> rows;
    rows.push_back(path.front().pose);
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!path[i].via_primitive) {
            throw StateError("write_path_csv: path entry " + std::to_string(i) + " has no primitive");
        }
        const Pose base = path[i - 1].pose;
        for_each_sample(set.at(*path[i].via_primitive), resolution, [&](const RelativePose& s) {
            const Pose p = compose(base, s);
            if (!approx_equal(p, rows.back(), 1e-12)) rows.push_back(p);
            return true;
        });
        // The stored node pose is authoritative for the joint.
        rows.back() = path[i].pose;
    }

    std::string out = "x,y,theta\n";
    char buf[128];
    for (const auto& p : rows) {
        std::snprintf(buf, sizeof(buf), "%.9f,%.9f,%.9g\n", p.x, p.y, p.theta);
        out += buf;
    }
    return out;
}

std::vector<Pose> parse_path_csv(std::string_view text) {
    std::vector<Pose> poses;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header = false;
    while (pos < text.size()) {
        const auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!header) {
            if (line != "x,y,theta") throw ParseError(line_no, "expected header 'x,y,theta'");
            header = true;
            continue;
        }
        double v[3];
        std::size_t field = 0;
        std::size_t start = 0;
        for (; field < 3; ++field) {
            const auto comma = line.find(',', start);
            const auto end = (field == 2) ? line.size() : comma;
            if (end == std::string_view::npos) throw ParseError(line_no, "expected 3 fields");
            const auto word = line.substr(start, end - start);
            const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v[field]);
            if (ec != std::errc{} || ptr != word.data() + word.size()) {
                throw ParseError(line_no, "bad number '" + std::string(word) + "'");
            }
            start = end + 1;
        }
        poses.push_back({v[0], v[1], v[2]});
    }
    if (!header) throw ParseError(1, "missing header");
    return poses;
}

std::string write_tree_json(const Tree& tree, const RunConfig& config, PlanStatus status) {
    json nodes = json::array();
    for (const auto& n : tree.nodes()) {
        nodes.push_back({
            {"pose", {n.pose.x, n.pose.y, n.pose.theta}},
            {"parent", n.parent ? json(*n.parent) : json(nullptr)},
            {"prim", n.via_primitive ? json(*n.via_primitive) : json(nullptr)},
        });
    }
    const json doc = {
        {"config", to_json(config)},
        {"status", std::string(to_string(status))},
        {"nodes", std::move(nodes)},
    };
    return doc.dump() + "\n";
}

LoadedTree read_tree_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(1, std::string("tree JSON: ") + e.what());
    }
    try {
        std::vector<TreeNode> nodes;
        for (const auto& n : doc.at("nodes")) {
            const auto& pose = n.at("pose");
            TreeNode node;
            node.pose = {pose.at(0).get<double>(), pose.at(1).get<double>(), pose.at(2).get<double>()};
            if (!n.at("parent").is_null()) node.parent = n.at("parent").get<std::size_t>();
            if (!n.at("prim").is_null()) node.via_primitive = n.at("prim").get<int>();
            nodes.push_back(node);
        }
        return {Tree::from_nodes(std::move(nodes)), run_config_from_json(doc.at("config"))};
    } catch (const json::exception& e) {
        throw ParseError(1, std::string("tree JSON: ") + e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace primrrt
