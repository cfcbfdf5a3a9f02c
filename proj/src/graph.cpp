#include "lpa/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace lpa {

namespace {

void check_name(const std::string& name, std::string_view what) {
  if (name.empty()) throw GraphError(std::string(what) + " name is empty");
  for (char c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      throw GraphError(std::string(what) + " name '" + name + "' contains whitespace");
    }
  }
}

}  // namespace

Graph::Graph(std::string name, std::vector<std::string> vertices, std::vector<EdgeSpec> edges)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    check_name(vertices_[v], "vertex");
    if (!vertex_lookup_.emplace(vertices_[v], v).second) {
      throw GraphError("duplicate vertex '" + vertices_[v] + "'");
    }
  }
  out_.resize(vertices_.size());
  in_degree_.assign(vertices_.size(), 0);
  edges_.reserve(edges.size());
  for (auto& spec : edges) {
    check_name(spec.name, "edge");
    if (vertex_lookup_.contains(spec.name) || edge_lookup_.contains(spec.name)) {
      throw GraphError("duplicate name '" + spec.name + "'");
    }
    auto s = find_vertex(spec.source);
    auto r = find_vertex(spec.range);
    if (!s) throw GraphError("edge '" + spec.name + "' has unknown source vertex '" + spec.source + "'");
    if (!r) throw GraphError("edge '" + spec.name + "' has unknown range vertex '" + spec.range + "'");
    edge_lookup_.emplace(spec.name, edges_.size());
    out_[*s].push_back(edges_.size());
    ++in_degree_[*r];
    edges_.push_back(Edge{std::move(spec.name), *s, *r});
  }
  std::vector<EdgeIndex> by_name(edges_.size());
  std::iota(by_name.begin(), by_name.end(), EdgeIndex{0});
  std::sort(by_name.begin(), by_name.end(),
            [&](EdgeIndex a, EdgeIndex b) { return edges_[a].name < edges_[b].name; });
  edge_rank_.resize(edges_.size());
  for (std::size_t k = 0; k < by_name.size(); ++k) edge_rank_[by_name[k]] = k;
  for (auto& out : out_) {
    std::sort(out.begin(), out.end(),
              [&](EdgeIndex a, EdgeIndex b) { return edge_rank_[a] < edge_rank_[b]; });
  }
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view name) const {
  auto it = edge_lookup_.find(std::string(name));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw GraphError("unknown vertex '" + std::string(name) + "'");
}

EdgeIndex Graph::edge_index(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw GraphError("unknown edge '" + std::string(name) + "'");
}

std::vector<EdgeSpec> Graph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({e.name, vertices_[e.source], vertices_[e.range]});
  return out;
}

bool Graph::edge_specs_equal(const Graph& other) const {
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& a = edges_[k];
    const Edge& b = other.edges_[k];
    if (a.name != b.name || a.source != b.source || a.range != b.range) return false;
  }
  return true;
}

bool Graph::is_valid(const Path& p) const {
  if (p.base >= vertices_.size()) return false;
  VertexIndex at = p.base;
  for (EdgeIndex e : p.edges) {
    if (e >= edges_.size() || edges_[e].source != at) return false;
    at = edges_[e].range;
  }
  return true;
}

Path Graph::path_from_names(std::span<const std::string> edge_names) const {
  if (edge_names.size() == 1) {
    if (auto v = find_vertex(edge_names.front())) return trivial_path(*v);
  }
  if (edge_names.empty()) throw GraphError("empty path");
  Path p;
  for (const auto& n : edge_names) p.edges.push_back(edge_index(n));
  p.base = edges_[p.edges.front()].source;
  if (!is_valid(p)) throw GraphError("edges do not compose into a path");
  return p;
}

std::string Graph::path_to_string(const Path& p) const {
  if (p.trivial()) return vertices_.at(p.base);
  std::string out;
  for (EdgeIndex e : p.edges) {
    if (!out.empty()) out += ' ';
    out += edges_.at(e).name;
  }
  return out;
}

Path Graph::concat(const Path& p, const Path& q) const {
  if (range(p) != q.base) throw GraphError("paths do not compose");
  Path out = p;
  out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
  return out;
}

bool Graph::path_less(const Path& p, const Path& q) const {
  if (p.length() != q.length()) return p.length() < q.length();
  if (p.trivial()) return vertices_[p.base] < vertices_[q.base];
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    if (p.edges[k] != q.edges[k]) return edge_rank_[p.edges[k]] < edge_rank_[q.edges[k]];
  }
  return false;
}

bool is_prefix(const Path& p, const Path& q) {
  if (p.base != q.base || p.edges.size() > q.edges.size()) return false;
  return std::equal(p.edges.begin(), p.edges.end(), q.edges.begin());
}

IntMatrix adjacency(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) a(e.source, e.range) += 1;
  return a;
}

namespace {

std::vector<bool> reachable_from(const Graph& g, VertexIndex start) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexIndex> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    VertexIndex v = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.out_edges(v)) {
      VertexIndex w = g.edge(e).range;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

GraphPredicates graph_predicates(const Graph& g) {
  GraphPredicates p;
  const std::size_t n = g.vertex_count();
  for (VertexIndex v = 0; v < n; ++v) {
    p.has_sinks |= g.is_sink(v);
    p.has_sources |= g.is_source(v);
  }
  p.essential = !p.has_sinks && !p.has_sources;

  p.strongly_connected = true;
  for (VertexIndex v = 0; v < n && p.strongly_connected; ++v) {
    auto seen = reachable_from(g, v);
    p.strongly_connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  p.trivial = n > 0 && p.strongly_connected;
  for (VertexIndex v = 0; v < n && p.trivial; ++v) {
    p.trivial = g.out_edges(v).size() == 1 && g.in_degree(v) == 1;
  }

  // A cycle lacks an exit exactly when every vertex on it emits a single
  // edge, so follow the unique out-edges through out-degree-one vertices.
  p.condition_L = true;
  for (VertexIndex start = 0; start < n && p.condition_L; ++start) {
    VertexIndex at = start;
    for (std::size_t step = 0; step < n; ++step) {
      if (g.out_edges(at).size() != 1) break;
      at = g.edge(g.out_edges(at).front()).range;
      if (at == start) {
        p.condition_L = false;
        break;
      }
    }
  }
  return p;
}

std::vector<Path> enumerate_X(const Graph& g, VertexIndex v, std::size_t m) {
  if (v >= g.vertex_count()) throw GraphError("unknown vertex index");
  std::vector<Path> done;
  std::vector<Path> frontier{g.trivial_path(v)};
  for (std::size_t len = 0; len < m; ++len) {
    std::vector<Path> next;
    for (auto& p : frontier) {
      VertexIndex r = g.range(p);
      if (g.is_sink(r)) {
        done.push_back(std::move(p));
        continue;
      }
      for (EdgeIndex e : g.out_edges(r)) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  done.insert(done.end(), std::make_move_iterator(frontier.begin()),
              std::make_move_iterator(frontier.end()));
  std::sort(done.begin(), done.end(),
            [&](const Path& a, const Path& b) { return g.path_less(a, b); });
  return done;
}

std::vector<Path> paths_of_length(const Graph& g, std::size_t n) {
  std::vector<Path> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (auto& p : enumerate_X(g, v, n)) {
      if (p.length() == n) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) { return g.path_less(a, b); });
  return out;
}

CylinderCheck cylinder_partition_check(const Graph& g, std::span<const Path> paths) {
  if (paths.empty()) throw GraphError("cylinder check needs a nonempty family");
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) throw GraphError("cylinder check requires a graph without sinks");
  }
  for (const auto& p : paths) {
    if (!g.is_valid(p)) throw GraphError("path does not lie in the graph");
  }
  CylinderCheck out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (i != j && is_prefix(paths[i], paths[j])) {
        out.kind = CylinderCheck::Kind::NotDisjoint;
        out.overlap = {paths[i], paths[j]};
        return out;
      }
    }
  }
  std::size_t longest = 0;
  for (const auto& p : paths) longest = std::max(longest, p.length());
  for (const auto& w : paths_of_length(g, longest)) {
    bool covered = std::any_of(paths.begin(), paths.end(),
                               [&](const Path& p) { return is_prefix(p, w); });
    if (!covered) {
      out.kind = CylinderCheck::Kind::NotCovering;
      out.uncovered = w;
      return out;
    }
  }
  return out;
}

}  // namespace lpa
