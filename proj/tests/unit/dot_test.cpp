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


#include "clusterkit/dot.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"

namespace clusterkit {
namespace {

using fixtures::a2;
using fixtures::b2;
using fixtures::b3;

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Dot, Diagram) {
  EXPECT_EQ(to_dot(matrix_to_diagram(b2())),
            "digraph diagram {\n"
            "  v1;\n"
            "  v2;\n"
            "  v1 -> v2 [label=\"2\"];\n"
            "}\n");
}

TEST(Dot, A2Pentagon) {
  EXPECT_EQ(to_dot(build_exchange_graph(initial_seed(a2()))),
            "graph exchange_graph {\n"
            "  s0 [label=\"0\"];\n"
            "  s1 [label=\"1\"];\n"
            "  s2 [label=\"2\"];\n"
            "  s3 [label=\"3\"];\n"
            "  s4 [label=\"4\"];\n"
            "  s0 -- s1;\n"
            "  s0 -- s2;\n"
            "  s1 -- s3;\n"
            "  s2 -- s4;\n"
            "  s3 -- s4;\n"
            "}\n");
}

TEST(Dot, B2MarkedHexagon) {
  EXPECT_EQ(to_dot(build_marked_exchange_graph(initial_seed(b2()))),
            "graph marked_exchange_graph {\n"
            "  s0 [label=\"0\"];\n"
            "  s1 [label=\"1\"];\n"
            "  s2 [label=\"2\"];\n"
            "  s3 [label=\"3\"];\n"
            "  s4 [label=\"4\"];\n"
            "  s5 [label=\"5\"];\n"
            "  s0 -- s1 [label=\"1\", class=\"mark1\", style=dotted];\n"
            "  s0 -- s2 [label=\"2\", class=\"mark2\", style=dashed];\n"
            "  s1 -- s3 [label=\"2\", class=\"mark2\", style=dashed];\n"
            "  s2 -- s4 [label=\"1\", class=\"mark1\", style=dotted];\n"
            "  s3 -- s5 [label=\"1\", class=\"mark1\", style=dotted];\n"
            "  s4 -- s5 [label=\"2\", class=\"mark2\", style=dashed];\n"
            "}\n");
}

TEST(Dot, ClusterLabels) {
  DotOptions o;
  o.cluster_labels = true;
  std::string text = to_dot(build_exchange_graph(initial_seed(a2())), o);
  EXPECT_NE(text.find("s0 [label=\"x1\\nx2\"];"), std::string::npos) << text;
  EXPECT_NE(text.find("x1^-1 + x1^-1*x2"), std::string::npos);
}

TEST(Dot, LabelledEdgesCarryTheMutationIndex) {
  LabelledExchangeGraph g = build_labelled_exchange_graph(initial_seed(b3()));
  std::string text = to_dot(g);
  EXPECT_EQ(count(text, " -- "), g.edge_count());
  std::size_t per_label[3] = {0, 0, 0};
  for (const LabelledEdge& e : g.edges) ++per_label[e.label];
  std::size_t seen[3] = {0, 0, 0};
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.find(" -- ") == std::string::npos) continue;
    for (std::size_t k = 0; k < 3; ++k)
      if (line.find("[label=\"" + std::to_string(k + 1) + "\"]") != std::string::npos) ++seen[k];
  }
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(seen[k], per_label[k]);
}

TEST(Dot, B3MarksAndDeterminism) {
  MarkedExchangeGraph g = build_marked_exchange_graph(initial_seed(b3()));
  std::string text = to_dot(g);
  EXPECT_EQ(count(text, "style=dashed"), count(text, "class=\"mark2\""));
  EXPECT_EQ(count(text, "style=dotted") + count(text, "style=dashed"), g.graph.edge_count());
  EXPECT_EQ(text, to_dot(build_marked_exchange_graph(initial_seed(b3()))));
}

}  // namespace
}  // namespace clusterkit
