#pragma once

#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"

namespace lpa {

/// For each vertex, an ordered partition of its outgoing edges into nonempty
/// classes. Vertices without an entry keep all their edges in one class.
struct OutSplitPartition {
  std::vector<std::vector<std::vector<EdgeIndex>>> classes;  // indexed by vertex

  /// One class per vertex holding every outgoing edge.
  static OutSplitPartition trivial(const Graph& g);
  /// Singleton classes everywhere.
  static OutSplitPartition complete(const Graph& g);
};

/// Attaches v#s1, v#s2 with edges v#d1: v->v#s1, v#d2: v#s1->v, v#e1 loop
/// at v#s1, v#e2: v#s1->v#s2, v#e3: v#s2->v#s1, v#e4 loop at v#s2.
Graph cuntz_splice(const Graph& g, VertexIndex v);

/// Vertex v with m classes becomes v^1..v^m (sinks keep their name); edge e
/// becomes e^1..e^m(r(e)) with e^j: s(e)^k -> r(e)^j for e in class k.
Graph out_split(const Graph& g, const OutSplitPartition& p);

/// Vertices v1..vN and an edge e<i>_<j>: v<i> -> v<j> per unit entry.
Graph edge_graph_from_matrix(const IntMatrix& a, std::string name = "edge_graph");

/// Appends w -> w_1 -> ... -> w_depth (edges e^w_1 ... e^w_depth) at every
/// sink w. The resulting tails end in new sinks.
Graph add_tails(const Graph& g, std::size_t depth);

}  // namespace lpa
