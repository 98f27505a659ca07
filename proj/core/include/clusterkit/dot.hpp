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


// Graphviz output. Vertex numbering follows the builders, so output is
// identical across runs.

#ifndef CLUSTERKIT_DOT_HPP_
#define CLUSTERKIT_DOT_HPP_

#include <string>

#include "clusterkit/exchange_graph.hpp"

namespace clusterkit {

struct DotOptions {
  // Label vertices with their cluster instead of their index.
  bool cluster_labels = false;
};

// Vertices v1..vn; every arc carries label=weight.
std::string to_dot(const Diagram& d);

std::string to_dot(const LabelledExchangeGraph& g, const DotOptions& options = {});
std::string to_dot(const ExchangeGraph& g, const DotOptions& options = {});
// Edges carry the mark and class "mark<k>"; mark 1 is dotted, mark 2 dashed.
std::string to_dot(const MarkedExchangeGraph& g, const DotOptions& options = {});

}  // namespace clusterkit

#endif  // CLUSTERKIT_DOT_HPP_
