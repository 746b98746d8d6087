// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 primrrt authors

#include <gtest/gtest.h>

#include "primrrt/errors.hpp"
#include "primrrt/io.hpp"
#include "support/oracles.hpp"

namespace primrrt {
namespace {

std::size_t data_rows(const std::string& csv) {
    return parse_path_csv(csv).size();
}

TEST(PathCsv, SinglePose) {
    const std::vector<PathEntry> path{{{1, 2, 0.5}, std::nullopt}};
    const auto csv = write_path_csv(path, builtin_set("car1"), 0.05);
    EXPECT_EQ(csv.substr(0, 10), "x,y,theta\n");
    EXPECT_EQ(data_rows(csv), 1u);
}

TEST(PathCsv, OneStraightEdge) {
    const auto set = builtin_set("car1");
    const Pose start{1, 1, 0};
    const std::vector<PathEntry> path{{start, std::nullopt}, {compose(start, set[0].end), 0}};
    const auto rows = parse_path_csv(write_path_csv(path, set, 0.25));
    ASSERT_EQ(rows.size(), 5u);
    for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_NEAR(rows[i].x, 1.0 + 0.25 * i, 1e-9);
}

TEST(PathCsv, EmptyPathIsStateError) {
    EXPECT_THROW((void)write_path_csv({}, builtin_set("car1"), 0.05), StateError);
}

TEST(PathCsv, ReplaySpacingAndEndpoint) {
    const auto ws = Workspace::from_markers(load_map_file(std::string(PRIMRRT_TEST_MAP_DIR) + "/small_maze.txt"));
    for (const auto name : {"car3", "turtle2"}) {
        const auto set = builtin_set(name);
        PlannerConfig cfg;
        cfg.rng_seed = 4;
        const auto result = plan(ws, set, cfg);
        ASSERT_EQ(result.status, PlanStatus::Success);
        const auto rows = parse_path_csv(write_path_csv(result.path, set, 0.05));
        ASSERT_GT(rows.size(), result.path.size());
        EXPECT_TRUE(approx_equal(rows.front(), result.path.front().pose, 1e-8));
        EXPECT_TRUE(approx_equal(rows.back(), result.path.back().pose, 1e-8));
        for (std::size_t i = 1; i < rows.size(); ++i) {
            ASSERT_LE(distance(rows[i - 1].position(), rows[i].position()), 0.05 + 1e-8);
            ASSERT_TRUE(oracle::brute_force_free(ws.map(), ws.robot_radius(), rows[i].position()));
        }
    }
}

TEST(PathCsv, ParseErrors) {
    EXPECT_THROW((void)parse_path_csv("a,b,c\n1,2,3\n"), ParseError);
    EXPECT_THROW((void)parse_path_csv("x,y,theta\n1,2\n"), ParseError);
    EXPECT_THROW((void)parse_path_csv("x,y,theta\n1,2,zz\n"), ParseError);
    EXPECT_THROW((void)parse_path_csv(""), ParseError);
}

RunConfig config_for(std::uint64_t seed) {
    RunConfig c;
    c.map_path = "small_maze.txt";
    c.set_name = "car1";
    c.planner.rng_seed = seed;
    return c;
}

TEST(TreeJson, RoundTripKeepsInvariants) {
    const auto ws = Workspace::from_markers(load_map_file(std::string(PRIMRRT_TEST_MAP_DIR) + "/small_maze.txt"));
    const auto set = builtin_set("car1");
    const auto cfg = config_for(17);
    const auto result = plan(ws, set, cfg.planner);
    const auto text = write_tree_json(result.tree, cfg, result.status);

    const auto loaded = read_tree_json(text);
    ASSERT_EQ(loaded.tree.size(), result.tree.size());
    for (std::size_t i = 0; i < loaded.tree.size(); ++i) {
        ASSERT_EQ(loaded.tree[i].pose, result.tree[i].pose);  // doubles round-trip exactly
        ASSERT_EQ(loaded.tree[i].parent, result.tree[i].parent);
        ASSERT_EQ(loaded.tree[i].via_primitive, result.tree[i].via_primitive);
        if (i > 0) {
            const auto& parent = loaded.tree[*loaded.tree[i].parent].pose;
            ASSERT_TRUE(approx_equal(loaded.tree[i].pose,
                                     compose(parent, set.at(*loaded.tree[i].via_primitive).end), 1e-9));
        }
    }
    EXPECT_EQ(loaded.config.planner.rng_seed, 17u);
    EXPECT_EQ(loaded.config.set_name, "car1");
    EXPECT_EQ(loaded.config.map_path, "small_maze.txt");

    // The echoed config reproduces the run byte for byte.
    const auto again = plan(ws, builtin_set(loaded.config.set_name), loaded.config.planner);
    EXPECT_EQ(write_tree_json(again.tree, loaded.config, again.status), text);
}

TEST(TreeJson, MalformedInput) {
    EXPECT_THROW((void)read_tree_json("{"), ParseError);
    EXPECT_THROW((void)read_tree_json(R"({"nodes": []})"), ParseError);
    const std::string bad_parent = R"({"config": )" + to_json(config_for(1)).dump() +
                                   R"(, "nodes": [{"pose":[0,0,0],"parent":null,"prim":null},
                                                  {"pose":[1,0,0],"parent":5,"prim":0}]})";
    EXPECT_THROW((void)read_tree_json(bad_parent), StateError);
}

TEST(RunRecord, SummaryAndJson) {
    PlanResult r;
    r.status = PlanStatus::Success;
    r.stats = {12, 9, 4.5, 2};
    const auto rec = make_record(config_for(3), r, 0.25);
    const auto line = summary_line(rec);
    EXPECT_NE(line.find("status=success"), std::string::npos);
    EXPECT_NE(line.find("seed=3"), std::string::npos);
    const auto j = to_json(rec);
    EXPECT_EQ(j.at("iterations"), 12);
    EXPECT_EQ(run_config_from_json(j.at("config")).planner.rng_seed, 3u);
}

}  // namespace
}  // namespace primrrt
