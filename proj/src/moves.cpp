#include "lpa/moves.hpp"

#include <set>

namespace lpa {

namespace {

Graph build(std::string name, std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  try {
    return Graph(std::move(name), std::move(vertices), std::move(edges));
  } catch (const GraphError& e) {
    throw GraphError(std::string("generated name collides with an existing one: ") + e.what());
  }
}

}  // namespace

OutSplitPartition OutSplitPartition::trivial(const Graph& g) {
  OutSplitPartition p;
  p.classes.resize(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto out = g.out_edges(v);
    if (!out.empty()) p.classes[v].emplace_back(out.begin(), out.end());
  }
  return p;
}

OutSplitPartition OutSplitPartition::complete(const Graph& g) {
  OutSplitPartition p;
  p.classes.resize(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (EdgeIndex e : g.out_edges(v)) p.classes[v].push_back({e});
  }
  return p;
}

Graph cuntz_splice(const Graph& g, VertexIndex v) {
  if (v >= g.vertex_count()) throw GraphError("unknown vertex index for splice");
  const std::string& base = g.vertex_name(v);
  std::vector<std::string> vertices(g.vertex_names().begin(), g.vertex_names().end());
  const std::string v1 = base + "#s1";
  const std::string v2 = base + "#s2";
  vertices.push_back(v1);
  vertices.push_back(v2);
  auto edges = g.edge_specs();
  edges.push_back({base + "#d1", base, v1});
  edges.push_back({base + "#d2", v1, base});
  edges.push_back({base + "#e1", v1, v1});
  edges.push_back({base + "#e2", v1, v2});
  edges.push_back({base + "#e3", v2, v1});
  edges.push_back({base + "#e4", v2, v2});
  return build(g.name() + "_splice", std::move(vertices), std::move(edges));
}

Graph out_split(const Graph& g, const OutSplitPartition& p) {
  if (p.classes.size() != g.vertex_count()) {
    throw GraphError("out-split partition must list every vertex");
  }
  // class_of[e] = index of the class of e within s(e)
  std::vector<std::size_t> class_of(g.edge_count(), 0);
  std::vector<std::size_t> copies(g.vertex_count(), 1);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto out = g.out_edges(v);
    const auto& classes = p.classes[v];
    if (out.empty()) {
      if (!classes.empty()) {
        throw GraphError("sink '" + g.vertex_name(v) + "' cannot be partitioned");
      }
      continue;
    }
    if (classes.empty()) {
      throw GraphError("vertex '" + g.vertex_name(v) + "' has no partition of its edges");
    }
    std::set<EdgeIndex> seen;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (classes[k].empty()) {
        throw GraphError("empty class in the partition at '" + g.vertex_name(v) + "'");
      }
      for (EdgeIndex e : classes[k]) {
        if (e >= g.edge_count() || g.edge(e).source != v) {
          throw GraphError("class at '" + g.vertex_name(v) + "' contains an edge it does not emit");
        }
        if (!seen.insert(e).second) {
          throw GraphError("edge '" + g.edge(e).name + "' appears in two classes");
        }
        class_of[e] = k;
      }
    }
    if (seen.size() != out.size()) {
      throw GraphError("partition at '" + g.vertex_name(v) + "' misses an outgoing edge");
    }
    copies[v] = classes.size();
  }

  auto copy_name = [&](VertexIndex v, std::size_t k) {
    return g.is_sink(v) ? g.vertex_name(v) : g.vertex_name(v) + "^" + std::to_string(k + 1);
  };
  std::vector<std::string> vertices;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t k = 0; k < copies[v]; ++k) vertices.push_back(copy_name(v, k));
  }
  std::vector<EdgeSpec> edges;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const std::string source = copy_name(edge.source, class_of[e]);
    if (g.is_sink(edge.range)) {
      edges.push_back({edge.name, source, g.vertex_name(edge.range)});
      continue;
    }
    for (std::size_t j = 0; j < copies[edge.range]; ++j) {
      edges.push_back({edge.name + "^" + std::to_string(j + 1), source, copy_name(edge.range, j)});
    }
  }
  return build(g.name() + "_split", std::move(vertices), std::move(edges));
}

Graph edge_graph_from_matrix(const IntMatrix& a, std::string name) {
  if (!a.square()) throw GraphError("edge graph needs a square matrix");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < a.rows(); ++i) vertices.push_back("v" + std::to_string(i + 1));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (a(i, j) != 1) {
        throw GraphError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") = " + a(i, j).get_str() + " is not 0 or 1");
      }
      edges.push_back({"e" + std::to_string(i + 1) + "_" + std::to_string(j + 1), vertices[i],
                       vertices[j]});
    }
  }
  return Graph(std::move(name), std::move(vertices), std::move(edges));
}

Graph add_tails(const Graph& g, std::size_t depth) {
  if (depth == 0) return g;
  std::vector<std::string> vertices(g.vertex_names().begin(), g.vertex_names().end());
  auto edges = g.edge_specs();
  bool any_sink = false;
  for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
    if (!g.is_sink(w)) continue;
    any_sink = true;
    const std::string& name = g.vertex_name(w);
    std::string previous = name;
    for (std::size_t i = 1; i <= depth; ++i) {
      std::string next = name + "_" + std::to_string(i);
      vertices.push_back(next);
      edges.push_back({"e^" + name + "_" + std::to_string(i), previous, next});
      previous = std::move(next);
    }
  }
  if (!any_sink) return g;
  return build(g.name() + "_tails", std::move(vertices), std::move(edges));
}

}  // namespace lpa
