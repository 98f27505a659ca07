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

#include <span>
#include <sstream>

namespace clusterkit {
namespace {

std::string cluster_text(std::span<const LaurentPoly> cluster) {
  std::string out;
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    if (i) out += "\\n";
    out += cluster[i].to_string();
  }
  return out;
}

void vertex_line(std::ostringstream& os, std::size_t v, std::span<const LaurentPoly> cluster, const DotOptions& options) {
  os << "  s" << v << " [label=\"";
  if (options.cluster_labels) {
    os << cluster_text(cluster);
  } else {
    os << v;
  }
  os << "\"];\n";
}

const char* mark_style(std::int64_t mark) {
  switch (mark) {
    case 1: return "dotted";
    case 2: return "dashed";
    default: return "solid";
  }
}

}  // namespace

std::string to_dot(const Diagram& d) {
  std::ostringstream os;
  os << "digraph diagram {\n";
  for (std::size_t v = 0; v < d.vertex_count; ++v) os << "  v" << (v + 1) << ";\n";
  for (const Arc& a : d.arcs) {
    os << "  v" << (a.source + 1) << " -> v" << (a.target + 1) << " [label=\"" << a.weight << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const LabelledExchangeGraph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "graph labelled_exchange_graph {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vertex_line(os, v, g.vertices.seeds[v].cluster, options);
  for (const LabelledEdge& e : g.edges) {
    os << "  s" << e.u << " -- s" << e.v << " [label=\"" << (e.label + 1) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const ExchangeGraph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "graph exchange_graph {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vertex_line(os, v, g.vertices.seeds[v].cluster, options);
  for (const GraphEdge& e : g.edges) os << "  s" << e.u << " -- s" << e.v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const MarkedExchangeGraph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "graph marked_exchange_graph {\n";
  for (std::size_t v = 0; v < g.graph.vertex_count(); ++v) {
    vertex_line(os, v, g.graph.vertices.seeds[v].cluster, options);
  }
  for (std::size_t i = 0; i < g.graph.edges.size(); ++i) {
    const GraphEdge& e = g.graph.edges[i];
    const std::int64_t m = g.marks[i];
    os << "  s" << e.u << " -- s" << e.v << " [label=\"" << m << "\", class=\"mark" << m << "\", style=" << mark_style(m)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace clusterkit
