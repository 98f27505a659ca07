// Copyright 2026 The cluster-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "clusterkit/errors.hpp"

namespace clusterkit::cli {
namespace {

std::string data(const std::string& name) { return std::string(CLUSTER_KIT_TEST_DATA) + "/" + name; }

Json load(const std::string& name) {
  std::ifstream in(data(name));
  return Json::parse(in);
}

Json report(const Result& r) { return Json::parse(r.text); }

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "clusterkit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Readers, Matrix) {
  MatrixInput m = read_matrix(load("b2_matrix.json"));
  EXPECT_EQ(m.b, ExchangeMatrix::from_rows({{0, 1}, {-2, 0}}));
  EXPECT_THROW(read_matrix(Json::parse(R"({"n": 3, "B": [[0,1],[-1,0]]})")), InvalidInput);
  EXPECT_THROW(read_matrix(Json::parse(R"({"B": [[0,1],[-2,0]], "D": [1,1]})")), InvalidInput);
  EXPECT_THROW(read_matrix(Json::parse(R"({"B": [[0,1],[-2,0]], "D": [-1,-2]})")), InvalidInput);
  EXPECT_THROW(read_matrix(Json::parse(R"({"B": "none"})")), InvalidInput);
  EXPECT_EQ(read_matrix(Json::parse(R"({"B": [[0,1],[-2,0]], "D": [2,4]})")).d->d, (std::vector<std::int64_t>{2, 4}));
}

TEST(Readers, Seed) {
  LabelledSeed u = read_seed(Json::parse(R"({"B": [[0,1],[-1,0]]})"));
  EXPECT_EQ(u, initial_seed(ExchangeMatrix::from_rows({{0, 1}, {-1, 0}})));
  LabelledSeed v = read_seed(Json::parse(R"({"cluster": ["x2", "x1^-1 + x1^-1*x2"], "B": [[0,-1],[1,0]]})"));
  EXPECT_EQ(v.cluster[0].to_string(), "x2");
  EXPECT_THROW(read_seed(Json::parse(R"({"cluster": ["x1"], "B": [[0,1],[-1,0]]})")), InvalidInput);
}

TEST(Readers, Unfolding) {
  UnfoldingSpec s = read_unfolding(load("b2_to_a3.json"));
  EXPECT_EQ(s.blocks, (Blocks{{0}, {1, 2}}));
  EXPECT_THROW(read_unfolding(Json::parse(R"({"B": [[0,1],[-2,0]], "blocks": [[0],[1,2]], "C": [[0,1,1],[-1,0,0],[-1,0,0]]})")),
               InvalidInput);
}

TEST(Commands, Symmetrize) {
  Json j = report(cmd_symmetrize(load("b2_matrix.json")));
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["D"], Json::parse("[1,2]"));
  EXPECT_EQ(j["minimal_D"], Json::parse("[1,2]"));
  EXPECT_THROW(cmd_symmetrize(load("not_symmetrizable.json")), InvalidInput);
}

TEST(Commands, Diagram) {
  Json j = report(cmd_diagram(load("b2_matrix.json"), false));
  ASSERT_EQ(j["arcs"].size(), 1u);
  Result dot = cmd_diagram(load("b2_matrix.json"), true);
  EXPECT_EQ(dot.text.rfind("digraph diagram {", 0), 0u);
}

TEST(Commands, Finite) {
  EXPECT_EQ(report(cmd_finite(load("b2_matrix.json"), 1000))["verdict"], "finite");
  Json wild = Json::parse(R"({"B": [[0,3,0],[-3,0,3],[0,-3,0]]})");
  EXPECT_EQ(report(cmd_finite(wild, 1000))["verdict"], "infinite");
}

TEST(Commands, Mutate) {
  Json j = report(cmd_mutate(load("b2.json"), "m1 m2"));
  EXPECT_EQ(j["result"]["cluster"][0], "x1^-1 + x1^-1*x2^2");
  EXPECT_THROW(cmd_mutate(load("b2.json"), "m3"), InvalidInput);
}

TEST(Commands, GraphCounts) {
  Limits limits;
  Json a2 = report(cmd_graph(load("a2.json"), GraphKind::kUnlabelled, false, false, limits));
  EXPECT_EQ(a2["vertex_count"], 5);
  EXPECT_EQ(a2["edge_count"], 5);
  Json b2 = report(cmd_graph(load("b2.json"), GraphKind::kLabelled, false, false, limits));
  EXPECT_EQ(b2["vertex_count"], 12);
  EXPECT_EQ(b2["components"], 2);
  Json b3 = report(cmd_graph(load("b3.json"), GraphKind::kMarked, false, false, limits));
  EXPECT_EQ(b3["vertex_count"], 20);
  std::map<std::int64_t, int> marks;
  for (const Json& e : b3["edges"]) ++marks[e["mark"].get<std::int64_t>()];
  EXPECT_EQ(marks[1], 20);
  EXPECT_EQ(marks[2], 10);
}

TEST(Commands, GraphCapAndRadius) {
  Limits tiny;
  tiny.cap = 3;
  EXPECT_THROW(cmd_graph(load("a3.json"), GraphKind::kUnlabelled, false, false, tiny), CapExceeded);
  Limits ball;
  ball.radius = 1;
  Result r = cmd_graph(load("a3.json"), GraphKind::kUnlabelled, false, false, ball);
  Json j = report(r);
  EXPECT_EQ(j["vertex_count"], 4);
  EXPECT_EQ(j["truncated"], true);
}

TEST(Commands, Auts) {
  Json j = report(cmd_auts(load("b3.json"), true, {}));
  EXPECT_EQ(j["group"]["order"], 8);
  EXPECT_EQ(j["group"]["type"], "dihedral");
  EXPECT_EQ(j["plus_subgroup"]["order"], 4);
  EXPECT_EQ(j["plus_subgroup"]["type"], "cyclic");
  EXPECT_EQ(j["index"], 2);
  EXPECT_EQ(j["automorphisms"].size(), 8u);
  Json u = report(cmd_auts(load("b2.json"), false, {}));
  EXPECT_EQ(u["group"]["order"], 12);
  std::set<std::string> directions;
  for (const Json& a : u["automorphisms"]) directions.insert(a["direction"]);
  EXPECT_EQ(directions, (std::set<std::string>{"direct", "inverse", "non-cluster"}));
  Limits ball;
  ball.radius = 1;
  EXPECT_THROW(cmd_auts(load("b2.json"), true, ball), InvalidInput);
}

TEST(Commands, Unfold) {
  Json j = report(cmd_unfold(load("b2_to_a3.json"), true, {}));
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["embedded_count"], 6);
  EXPECT_EQ(j["injective"], true);
  EXPECT_EQ(j["direction_preserving"], true);
  EXPECT_EQ(j["homomorphic"], true);
  EXPECT_EQ(j["image_group"]["order"], 6);
  EXPECT_EQ(j["correspondence"], Json::parse(R"([["y1"],["y2","y3"]])"));
  Json plain = report(cmd_unfold(load("b2_to_a3.json"), false, {}));
  EXPECT_FALSE(plain.contains("embedded"));
}

TEST(Commands, Green) {
  Json j = report(cmd_green(load("a2_quiver.json"), std::nullopt, 1'000'000));
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["sequences"][0]["sequence"], "m1 m2");
  EXPECT_EQ(j["sequences"][1]["sequence"], "m2 m1 m2");
  EXPECT_EQ(j["sequences"][1]["permutation"], "(1 2)");
  EXPECT_EQ(j["sequences"][0]["realization"], j["sequences"][1]["realization"]);
  Result capped = cmd_green(load("a3.json"), 12, 2);
  EXPECT_EQ(capped.exit_code, kInconclusive);
}

TEST(CommandLine, ExitCodes) {
  EXPECT_EQ(run_cli({"auts", data("b2.json"), "--marked"}).code, kOk);
  EXPECT_EQ(run_cli({"symmetrize", data("not_symmetrizable.json")}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"graph", data("disconnected.json")}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"auts", data("disconnected.json")}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"graph", data("a3.json"), "--cap", "3"}).code, kInconclusive);
  EXPECT_EQ(run_cli({"graph", data("missing.json")}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"nonsense"}).code, kInvalidInput);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST(CommandLine, DiagnosticsGoToStderr) {
  Invocation r = run_cli({"symmetrize", data("not_symmetrizable.json")});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CommandLine, OutputIsDeterministic) {
  for (const char* cmd : {"auts", "graph"}) {
    Invocation a = run_cli({cmd, data("b3.json"), "--marked"});
    Invocation b = run_cli({cmd, data("b3.json"), "--marked"});
    EXPECT_EQ(a.out, b.out);
  }
  EXPECT_EQ(run_cli({"unfold", data("b2_to_a3.json"), "--embed"}).out,
            run_cli({"unfold", data("b2_to_a3.json"), "--embed"}).out);
}

}  // namespace
}  // namespace clusterkit::cli
