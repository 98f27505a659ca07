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


// The clusterkit command line, as a library so tests can drive it in-process.

#ifndef CLUSTERKIT_TOOLS_CLI_HPP_
#define CLUSTERKIT_TOOLS_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "clusterkit/unfolding.hpp"
#include "json.hpp"

namespace clusterkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kInconclusive = 3, kInvariantViolation = 4 };

// {"n": 2, "B": [[0,1],[-2,0]], "D": [1,2]}; "n" and "D" are optional and
// checked against B when present.
struct MatrixInput {
  ExchangeMatrix b;
  std::optional<Symmetrizer> d;
};
MatrixInput read_matrix(const Json& j);
// {"cluster": ["x1", "x2"], "B": ...}; a missing cluster means x1..xn.
LabelledSeed read_seed(const Json& j);
// {"B": ..., "blocks": [[1],[2,3]], "C": ...} with 1-based blocks.
UnfoldingSpec read_unfolding(const Json& j);

Json matrix_json(const ExchangeMatrix& b);
Json cluster_json(const std::vector<LaurentPoly>& cluster, std::string_view prefix = "x");
Json seed_json(const LabelledSeed& u, std::string_view prefix = "x");
Json permutation_json(const Permutation& p);  // 0-based images
Json group_json(const AutGroup& g);

struct Limits {
  std::size_t cap = 1'000'000;
  bool strict_seeds = false;
  std::optional<std::size_t> radius;

  EnumerationOptions enumeration() const { return {cap, strict_seeds, radius}; }
};

enum class GraphKind { kUnlabelled, kLabelled, kMarked };

// Each command returns the report; `exit_code` is raised to kInconclusive
// when the answer is undecided at the given caps.
struct Result {
  std::string text;
  int exit_code = kOk;
};

Result cmd_symmetrize(const Json& input);
Result cmd_diagram(const Json& input, bool dot);
Result cmd_finite(const Json& input, std::size_t cap);
Result cmd_mutate(const Json& input, const std::string& word);
Result cmd_graph(const Json& input, GraphKind kind, bool dot, bool cluster_labels, const Limits& limits);
Result cmd_auts(const Json& input, bool marked, const Limits& limits);
Result cmd_unfold(const Json& input, bool embed, const Limits& limits);
Result cmd_green(const Json& input, std::optional<std::size_t> max_len, std::size_t cap);

// Full command line; output and diagnostics go to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clusterkit::cli

#endif  // CLUSTERKIT_TOOLS_CLI_HPP_
