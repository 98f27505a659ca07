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

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "clusterkit/dot.hpp"
#include "clusterkit/errors.hpp"
#include "clusterkit/green.hpp"

namespace clusterkit::cli {
namespace {

// Shape errors from the JSON library surface as InvalidInput.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

ExchangeMatrix matrix_from(const Json& rows) {
  return ExchangeMatrix::from_rows(rows.get<std::vector<std::vector<std::int64_t>>>());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json report_head(const char* command, Json input) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = std::move(input);
  return j;
}

Json matrix_echo(const MatrixInput& m) {
  Json j;
  j["n"] = m.b.rank();
  j["B"] = matrix_json(m.b);
  if (m.d) j["D"] = m.d->d;
  return j;
}

Json seed_echo(const LabelledSeed& u) {
  Json j;
  j["cluster"] = cluster_json(u.cluster);
  j["B"] = matrix_json(u.matrix);
  return j;
}

Json unfolding_echo(const UnfoldingSpec& s) {
  Json blocks = Json::array();
  for (const auto& block : s.blocks) {
    Json b = Json::array();
    for (std::size_t i : block) b.push_back(i + 1);
    blocks.push_back(std::move(b));
  }
  Json j;
  j["B"] = matrix_json(s.base);
  j["blocks"] = std::move(blocks);
  j["C"] = matrix_json(s.unfolded);
  return j;
}

Json automorphism_json(const ClusterAutomorphism& a, std::string_view prefix = "x") {
  Json j;
  j["vertex_map"] = permutation_json(a.vertex_map);
  j["direction"] = to_string(a.direction);
  j["realization"] = cluster_json(a.realization, prefix);
  j["image_B"] = matrix_json(a.image_matrix);
  return j;
}

Json group_summary(const AutGroup& g, const AutGroup& parent) {
  Json gens = Json::array();
  for (std::size_t i : g.generators) gens.push_back(*parent.index_of(g.elements[i]));
  Json j;
  j["order"] = g.order();
  j["generators"] = std::move(gens);
  j["type"] = g.type ? Json(to_string(*g.type)) : Json(nullptr);
  return j;
}

ClassGraphs full_graphs(const LabelledSeed& u, const Limits& limits) {
  if (limits.radius) throw InvalidInput("automorphisms need the full exchange graph; drop --radius");
  return build_class_graphs(u, limits.enumeration());
}

Json read_input(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not JSON: " + e.what());
  }
}

const char* finiteness_name(MutationFiniteness f) {
  switch (f) {
    case MutationFiniteness::kFinite: return "finite";
    case MutationFiniteness::kInfinite: return "infinite";
    case MutationFiniteness::kInconclusive: break;
  }
  return "inconclusive";
}

}  // namespace

MatrixInput read_matrix(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_object() || !j.contains("B")) throw InvalidInput("matrix input needs a \"B\" field");
    MatrixInput m{matrix_from(j.at("B")), std::nullopt};
    if (j.contains("n") && j.at("n").get<std::size_t>() != m.b.rank()) {
      throw InvalidInput("\"n\" does not match the size of \"B\"");
    }
    if (j.contains("D")) {
      auto d = j.at("D").get<std::vector<std::int64_t>>();
      if (d.size() != m.b.rank()) throw InvalidInput("\"D\" has the wrong length");
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 0) throw InvalidInput("\"D\" must be positive");
        for (std::size_t k = 0; k < d.size(); ++k) {
          if (m.b(i, k) * d[k] != -m.b(k, i) * d[i]) {
            throw InvalidInput("\"D\" does not symmetrize B at (" + std::to_string(i + 1) + "," +
                               std::to_string(k + 1) + ")");
          }
        }
      }
      m.d = Symmetrizer{std::move(d)};
    }
    return m;
  });
}

LabelledSeed read_seed(const Json& j) {
  return guarded("seed", [&] {
    ExchangeMatrix b = read_matrix(j).b;
    if (!j.contains("cluster")) return initial_seed(b);
    std::vector<LaurentPoly> cluster;
    for (const auto& text : j.at("cluster")) cluster.push_back(LaurentPoly::parse(text.get<std::string>(), b.rank()));
    return make_seed(std::move(cluster), std::move(b));
  });
}

UnfoldingSpec read_unfolding(const Json& j) {
  return guarded("unfolding", [&] {
    if (!j.is_object() || !j.contains("B") || !j.contains("blocks") || !j.contains("C")) {
      throw InvalidInput("unfolding input needs \"B\", \"blocks\" and \"C\"");
    }
    Blocks blocks;
    for (const auto& block : j.at("blocks")) {
      auto& out = blocks.emplace_back();
      for (std::size_t i : block.get<std::vector<std::size_t>>()) {
        if (i == 0) throw InvalidInput("block indices are 1-based");
        out.push_back(i - 1);
      }
    }
    return make_unfolding(matrix_from(j.at("B")), std::move(blocks), matrix_from(j.at("C")));
  });
}

Json matrix_json(const ExchangeMatrix& b) { return b.rows(); }

Json cluster_json(const std::vector<LaurentPoly>& cluster, std::string_view prefix) {
  Json j = Json::array();
  for (const auto& p : cluster) j.push_back(p.to_string(prefix));
  return j;
}

Json seed_json(const LabelledSeed& u, std::string_view prefix) {
  Json j;
  j["cluster"] = cluster_json(u.cluster, prefix);
  j["B"] = matrix_json(u.matrix);
  return j;
}

Json permutation_json(const Permutation& p) {
  return std::vector<std::size_t>(p.images().begin(), p.images().end());
}

Json group_json(const AutGroup& g) { return group_summary(g, g); }

Result cmd_symmetrize(const Json& input) {
  MatrixInput m = read_matrix(input);
  Symmetrizer minimal = compute_symmetrizer(m.b);
  Json j = report_head("symmetrize", matrix_echo(m));
  j["D"] = m.d ? m.d->d : minimal.d;
  j["minimal_D"] = minimal.d;
  return {dump(j)};
}

Result cmd_diagram(const Json& input, bool dot) {
  MatrixInput m = read_matrix(input);
  Diagram d = matrix_to_diagram(m.b);
  if (dot) return {to_dot(d)};
  Json arcs = Json::array();
  for (const Arc& a : d.arcs) arcs.push_back({{"source", a.source + 1}, {"target", a.target + 1}, {"weight", a.weight}});
  Json j = report_head("diagram", matrix_echo(m));
  j["vertices"] = d.vertex_count;
  j["arcs"] = std::move(arcs);
  return {dump(j)};
}

Result cmd_finite(const Json& input, std::size_t cap) {
  MatrixInput m = read_matrix(input);
  FinitenessReport r = is_mutation_finite(m.b, cap);
  Json j = report_head("finite", matrix_echo(m));
  j["verdict"] = finiteness_name(r.verdict);
  j["classes_explored"] = r.classes_explored;
  j["max_weight_seen"] = r.max_weight_seen;
  return {dump(j), r.verdict == MutationFiniteness::kInconclusive ? kInconclusive : kOk};
}

Result cmd_mutate(const Json& input, const std::string& word) {
  LabelledSeed u = read_seed(input);
  Word w = parse_word(word, u.rank());
  Json j = report_head("mutate", seed_echo(u));
  j["word"] = to_string(normalize(w, u.rank()));
  j["result"] = seed_json(apply_word(u, w));
  return {dump(j)};
}

Result cmd_graph(const Json& input, GraphKind kind, bool dot, bool cluster_labels, const Limits& limits) {
  LabelledSeed u = read_seed(input);
  DotOptions dot_options{cluster_labels};
  Json j = report_head("graph", seed_echo(u));
  Json vertices = Json::array();
  Json edges = Json::array();
  bool truncated = false;

  if (kind == GraphKind::kLabelled) {
    LabelledExchangeGraph g = build_labelled_exchange_graph(u, limits.enumeration());
    if (dot) return {to_dot(g, dot_options)};
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      Json s = seed_json(g.vertices.seeds[v]);
      vertices.push_back({{"id", v}, {"cluster", s["cluster"]}, {"B", s["B"]}});
    }
    for (const LabelledEdge& e : g.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label + 1}});
    truncated = g.vertices.truncated;
    j["kind"] = "labelled";
    j["components"] = g.component_count();
  } else {
    MarkedExchangeGraph m;
    if (kind == GraphKind::kMarked) {
      m = build_marked_exchange_graph(u, limits.enumeration());
      if (dot) return {to_dot(m, dot_options)};
    } else {
      m.graph = build_exchange_graph(u, limits.enumeration());
      if (dot) return {to_dot(m.graph, dot_options)};
    }
    const ExchangeGraph& g = m.graph;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      vertices.push_back({{"id", v}, {"cluster", cluster_json(g.vertices.seeds[v].cluster)},
                          {"B", matrix_json(g.vertices.seeds[v].matrix)}});
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      Json e = {{"u", g.edges[i].u}, {"v", g.edges[i].v}};
      if (kind == GraphKind::kMarked) e["mark"] = m.marks[i];
      edges.push_back(std::move(e));
    }
    truncated = g.vertices.truncated;
    j["kind"] = kind == GraphKind::kMarked ? "marked" : "unlabelled";
  }
  j["vertex_count"] = vertices.size();
  j["edge_count"] = edges.size();
  j["truncated"] = truncated;
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return {dump(j)};
}

Result cmd_auts(const Json& input, bool marked, const Limits& limits) {
  LabelledSeed u = read_seed(input);
  ClassGraphs graphs = full_graphs(u, limits);
  Json j = report_head("auts", seed_echo(u));
  j["marked"] = marked;
  Json list = Json::array();
  auto entry = [&](const ClusterAutomorphism& a, const Permutation& phi) {
    Json e = automorphism_json(a);
    e["word"] = to_string(word_realization(phi, graphs));
    list.push_back(std::move(e));
  };

  if (marked) {
    ClusterAutomorphismReport r = cluster_automorphism_group(graphs);
    j["group"] = group_json(r.aut);
    j["plus_subgroup"] = group_summary(r.aut_plus, r.aut);
    j["index"] = r.index();
    j["opposite_in_class"] = r.opposite_in_class;
    for (std::size_t i = 0; i < r.aut.order(); ++i) entry(r.classified[i], r.aut.elements[i]);
  } else {
    AutGroup g = graph_automorphisms(graphs.graph());
    j["group"] = group_json(g);
    std::size_t counts[3] = {0, 0, 0};
    for (const Permutation& phi : g.elements) {
      ClusterAutomorphism a = classify(phi, graphs);
      ++counts[static_cast<int>(a.direction)];
      entry(a, phi);
    }
    j["counts"] = {{"direct", counts[0]}, {"inverse", counts[1]}, {"non_cluster", counts[2]}};
  }
  j["automorphisms"] = std::move(list);
  return {dump(j)};
}

Result cmd_unfold(const Json& input, bool embed, const Limits& limits) {
  UnfoldingSpec spec = read_unfolding(input);
  UnfoldingReport v = validate_unfolding(spec, limits.cap);
  Json j = report_head("unfold", unfolding_echo(spec));
  j["valid"] = v.verdict == UnfoldingVerdict::kValid;
  j["verdict"] = to_string(v.verdict);
  j["pairs_explored"] = v.pairs_explored;
  if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
  if (v.verdict == UnfoldingVerdict::kInconclusive) return {dump(j), kInconclusive};

  UnfoldedSeed unfolded = unfold_seed(initial_seed(spec.base), spec);
  Json correspondence = Json::array();
  for (const auto& block : unfolded.correspondence) {
    Json names = Json::array();
    for (std::size_t i : block) names.push_back("y" + std::to_string(i + 1));
    correspondence.push_back(std::move(names));
  }
  j["correspondence"] = std::move(correspondence);
  j["unfolded_seed"] = seed_json(unfolded.seed, "y");
  if (!embed) return {dump(j)};
  if (v.verdict != UnfoldingVerdict::kValid) throw InvalidInput("cannot embed through an invalid unfolding");

  ClassGraphs base = full_graphs(initial_seed(spec.base), limits);
  ClassGraphs lifted = full_graphs(initial_seed(spec.unfolded), limits);
  ClusterAutomorphismReport r = cluster_automorphism_group(base);
  GroupEmbedding ge = embed_automorphism_group(r.aut, spec, base, lifted);

  Json list = Json::array();
  std::set<Permutation> images;
  bool preserves_direction = true;
  for (std::size_t i = 0; i < r.aut.order(); ++i) {
    EmbeddedAutomorphism e = embed_automorphism(r.aut.elements[i], spec, base, lifted);
    images.insert(e.vertex_map);
    preserves_direction &= e.direction == r.classified[i].direction;
    Json source = automorphism_json(r.classified[i]);
    source["word"] = to_string(e.word);
    Json x;
    x["source_automorphism"] = std::move(source);
    x["vertex_map"] = permutation_json(e.vertex_map);
    x["direction"] = to_string(e.direction);
    x["realization"] = cluster_json(e.image.cluster, "y");
    x["image_B"] = matrix_json(e.image.matrix);
    x["word"] = to_string(e.word);
    x["section_vertex_map"] = permutation_json(ge.embedded[i].vertex_map);
    if (e.diagnostic) x["diagnostic"] = *e.diagnostic;
    list.push_back(std::move(x));
  }
  j["embedded_count"] = list.size();
  j["injective"] = images.size() == r.aut.order();
  j["direction_preserving"] = preserves_direction;
  j["ambiguity_order"] = ge.ambiguity.order();
  j["homomorphic"] = ge.homomorphic;
  j["image_group"] = ge.image ? group_json(*ge.image) : Json(nullptr);
  j["embedded_vertices"] = embedded_vertices(spec, base, lifted);
  j["embedded"] = std::move(list);
  return {dump(j)};
}

Result cmd_green(const Json& input, std::optional<std::size_t> max_len, std::size_t cap) {
  MatrixInput m = read_matrix(input);
  const std::size_t len = max_len.value_or(default_green_length(m.b));
  GreenSearchResult r = find_maximal_green_sequences(m.b, len, cap);
  Json j = report_head("green", matrix_echo(m));
  j["max_len"] = len;
  j["count"] = r.sequences.size();
  j["truncated_by_length"] = r.truncated_by_length;
  j["truncated_by_cap"] = r.truncated_by_cap;
  j["states"] = r.states;
  Json list = Json::array();
  for (const GreenSequence& s : r.sequences) {
    ClusterAutomorphism a = induced_automorphism(m.b, s);
    Json alignments = Json::array();
    for (const Permutation& p : s.alignments) alignments.push_back(p.to_cycle_string());
    list.push_back({{"sequence", to_string(MutationWord{s.mutations, {}})},
                    {"permutation", s.permutation.to_cycle_string()},
                    {"alignments", std::move(alignments)},
                    {"direction", to_string(a.direction)},
                    {"realization", cluster_json(a.realization)}});
  }
  j["sequences"] = std::move(list);
  return {dump(j), r.truncated_by_cap ? kInconclusive : kOk};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with cluster algebras of skew-symmetrizable type.", "clusterkit"};
  app.require_subcommand(1);
  app.footer(
      "Input files are JSON; '-' reads standard input.\n"
      "\n"
      "Environment:\n"
      "  CLUSTER_KIT_THREADS  maximum worker threads (default: hardware concurrency)\n"
      "\n"
      "Exit codes: 0 success, 2 invalid input, 3 inconclusive at the given caps,\n"
      "4 internal invariant violation.");

  std::string path;
  Limits limits;
  std::optional<std::size_t> max_len;
  std::string word;
  bool dot = false, json = false, labelled = false, marked = false, clusters = false, embed = false;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", path, "input JSON file")->required(); };
  std::size_t finite_cap = 100'000;
  std::size_t green_cap = 1'000'000;
  auto add_cap = [&](CLI::App* sub, std::size_t& cap, const char* what) {
    sub->add_option("--cap", cap, what)->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto add_enumeration = [&](CLI::App* sub) {
    add_cap(sub, limits.cap, "maximum number of labelled seeds");
    sub->add_flag("--strict-seeds", limits.strict_seeds, "require equal clusters to carry equal matrices");
  };

  auto* symmetrize = app.add_subcommand("symmetrize", "minimal symmetrizer D of a matrix");
  add_file(symmetrize);
  auto* diagram = app.add_subcommand("diagram", "weighted diagram of a matrix");
  add_file(diagram);
  diagram->add_flag("--dot", dot, "Graphviz output");
  auto* finite = app.add_subcommand("finite", "decide mutation-finiteness of a matrix");
  add_file(finite);
  add_cap(finite, finite_cap, "maximum number of matrix classes");
  auto* mutate = app.add_subcommand("mutate", "apply a word such as \"m1 m2 (1 2)\" to a seed");
  add_file(mutate);
  mutate->add_option("--word", word, "mutations m1..mn and cycles, left to right")->required();
  auto* graph = app.add_subcommand("graph", "exchange graph of a seed");
  add_file(graph);
  auto* kind = graph->add_option_group("kind");
  kind->add_flag("--labelled", labelled, "labelled exchange graph");
  kind->add_flag("--marked", marked, "marked exchange graph");
  kind->require_option(0, 1);
  auto* format = graph->add_option_group("format");
  format->add_flag("--dot", dot, "Graphviz output");
  format->add_flag("--json", json, "JSON output (default)");
  format->require_option(0, 1);
  graph->add_flag("--cluster-labels", clusters, "label DOT vertices with their clusters");
  add_enumeration(graph);
  graph->add_option("--radius", limits.radius, "stop expanding at this mutation distance")->check(CLI::PositiveNumber);
  auto* auts = app.add_subcommand("auts", "exchange graph automorphisms and their classification");
  add_file(auts);
  auts->add_flag("--marked", marked, "use the marked exchange graph");
  add_enumeration(auts);
  auto* unfold = app.add_subcommand("unfold", "validate an unfolding and optionally embed automorphisms");
  add_file(unfold);
  unfold->add_flag("--embed", embed, "embed the marked automorphisms of B into Aut E(C)");
  add_enumeration(unfold);
  auto* green = app.add_subcommand("green", "maximal green sequences of a quiver");
  add_file(green);
  green->add_option("--max-len", max_len, "longest sequence searched (default 2*(arrows+n))")->check(CLI::PositiveNumber);
  add_cap(green, green_cap, "maximum number of sequences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
  }

  try {
    Result r;
    if (symmetrize->parsed()) {
      r = cmd_symmetrize(read_input(path));
    } else if (diagram->parsed()) {
      r = cmd_diagram(read_input(path), dot);
    } else if (finite->parsed()) {
      r = cmd_finite(read_input(path), finite_cap);
    } else if (mutate->parsed()) {
      r = cmd_mutate(read_input(path), word);
    } else if (graph->parsed()) {
      GraphKind k = labelled ? GraphKind::kLabelled : marked ? GraphKind::kMarked : GraphKind::kUnlabelled;
      r = cmd_graph(read_input(path), k, dot, clusters, limits);
    } else if (auts->parsed()) {
      r = cmd_auts(read_input(path), marked, limits);
    } else if (unfold->parsed()) {
      r = cmd_unfold(read_input(path), embed, limits);
    } else {
      r = cmd_green(read_input(path), max_len, green_cap);
    }
    out << r.text;
    return r.exit_code;
  } catch (const InvalidInput& e) {
    err << "clusterkit: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const CapExceeded& e) {
    err << "clusterkit: inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const InvariantViolation& e) {
    err << "clusterkit: invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const nlohmann::json::exception& e) {
    err << "clusterkit: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "clusterkit: internal error: " << e.what() << "\n";
    return kInvariantViolation;
  }
}

}  // namespace clusterkit::cli
