#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lpa/matrix.hpp"

namespace lpa {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edge declaration by names, used to build graphs.
struct EdgeSpec {
  std::string name;
  std::string source;
  std::string range;
};

struct Edge {
  std::string name;
  VertexIndex source;
  VertexIndex range;
};

/// A finite path. A length-0 path is the vertex `base`; otherwise `base` is
/// the source of the first edge.
struct Path {
  VertexIndex base = 0;
  std::vector<EdgeIndex> edges;

  std::size_t length() const { return edges.size(); }
  bool trivial() const { return edges.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Finite directed multigraph with named vertices and edges.
class Graph {
 public:
  Graph() = default;
  Graph(std::string name, std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const std::string> vertex_names() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view name) const;
  VertexIndex vertex(std::string_view name) const;  // throws GraphError
  EdgeIndex edge_index(std::string_view name) const;  // throws GraphError

  /// Outgoing edges of v, sorted by edge name.
  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_.at(v); }
  std::size_t in_degree(VertexIndex v) const { return in_degree_.at(v); }
  bool is_sink(VertexIndex v) const { return out_.at(v).empty(); }
  bool is_source(VertexIndex v) const { return in_degree_.at(v) == 0; }
  /// Position of the edge in name order; used for length-lexicographic sorting.
  std::size_t edge_rank(EdgeIndex e) const { return edge_rank_.at(e); }

  /// Declarations in order, suitable to rebuild the graph.
  std::vector<EdgeSpec> edge_specs() const;

  // Path helpers.
  Path trivial_path(VertexIndex v) const { return Path{v, {}}; }
  Path edge_path(EdgeIndex e) const { return Path{edges_.at(e).source, {e}}; }
  VertexIndex source(const Path& p) const { return p.base; }
  VertexIndex range(const Path& p) const {
    return p.edges.empty() ? p.base : edges_.at(p.edges.back()).range;
  }
  bool is_valid(const Path& p) const;
  /// Builds a path from edge names, or the trivial path when `names` is a vertex.
  Path path_from_names(std::span<const std::string> edge_names) const;
  /// Edge names separated by spaces, or the vertex name for a trivial path.
  std::string path_to_string(const Path& p) const;
  /// p followed by q; requires range(p) == source(q).
  Path concat(const Path& p, const Path& q) const;
  /// Length-lexicographic order by edge names (vertex names for trivial paths).
  bool path_less(const Path& p, const Path& q) const;

  /// Same vertex and edge declarations (the graph name is ignored).
  bool same_structure(const Graph& other) const {
    return vertices_ == other.vertices_ && edge_specs_equal(other);
  }

 private:
  bool edge_specs_equal(const Graph& other) const;

  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::size_t> in_degree_;
  std::vector<std::size_t> edge_rank_;
};

/// true iff p is an initial segment of q (every path is a prefix of itself).
bool is_prefix(const Path& p, const Path& q);

/// Entry (v, w) counts the edges from v to w.
IntMatrix adjacency(const Graph& g);

struct GraphPredicates {
  bool has_sinks = false;
  bool has_sources = false;
  bool essential = false;
  bool strongly_connected = false;
  bool trivial = false;
  bool condition_L = false;
};

GraphPredicates graph_predicates(const Graph& g);

/// Paths from v of length exactly m, or shorter and ending at a sink, in
/// length-lexicographic order.
std::vector<Path> enumerate_X(const Graph& g, VertexIndex v, std::size_t m);

/// All paths of length exactly n (from every vertex), length-lexicographic.
std::vector<Path> paths_of_length(const Graph& g, std::size_t n);

struct CylinderCheck {
  enum class Kind { Partition, NotDisjoint, NotCovering };
  Kind kind = Kind::Partition;
  std::pair<Path, Path> overlap;  // NotDisjoint: (prefix, extension)
  Path uncovered;                 // NotCovering
};

/// Decides whether the cylinder sets of `paths` partition the infinite path
/// space. Throws GraphError if g has a sink or the family is empty.
CylinderCheck cylinder_partition_check(const Graph& g, std::span<const Path> paths);

}  // namespace lpa
