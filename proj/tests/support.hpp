#pragma once

// Fixture graphs and random generators shared by the unit and acceptance
// tests.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/graph.hpp"
#include "lpa/io.hpp"
#include "lpa/structure.hpp"

namespace lpa::testing {

inline Graph rose(std::size_t petals, std::string name = "") {
  std::vector<EdgeSpec> edges;
  for (std::size_t k = 0; k < petals; ++k) {
    edges.push_back({std::string(1, static_cast<char>('a' + k)), "u", "u"});
  }
  if (name.empty()) name = "E" + std::to_string(petals);
  return Graph(name, {"u"}, edges);
}

inline Graph e2() { return rose(2, "E2"); }

/// E2- (the Cuntz splice of E2 at u) with edges f1, f2, d1, d2, e1..e4.
inline Graph e2_minus() {
  return Graph("E2-", {"u", "v1", "v2"},
               {{"f1", "u", "u"},
                {"f2", "u", "u"},
                {"d1", "u", "v1"},
                {"d2", "v1", "u"},
                {"e1", "v1", "v1"},
                {"e2", "v1", "v2"},
                {"e3", "v2", "v1"},
                {"e4", "v2", "v2"}});
}

/// Line graph u1 -> u2 -> ... -> un.
inline Graph line_graph(std::size_t n) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (std::size_t k = 1; k <= n; ++k) vertices.push_back("u" + std::to_string(k));
  for (std::size_t k = 1; k < n; ++k) {
    edges.push_back({"g" + std::to_string(k), vertices[k - 1], vertices[k]});
  }
  return Graph("F" + std::to_string(n), vertices, edges);
}

inline Graph single_loop() { return Graph("loop", {"u"}, {{"a", "u", "u"}}); }

inline Path P(const Graph& g, std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return g.path_from_names(v);
}

inline Element X(const AlgebraPtr& a, std::string_view text) { return parse_expr(text, a); }

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random graph with 1..max_vertices vertices and up to max_edges edges.
/// With `sink_free`, every vertex gets at least one outgoing edge.
inline Graph random_graph(Rng& rng, std::size_t max_vertices, std::size_t max_edges,
                          bool sink_free = false) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  std::vector<std::string> vertices;
  for (std::size_t k = 0; k < n; ++k) vertices.push_back("v" + std::to_string(k));
  std::vector<EdgeSpec> edges;
  auto add = [&](std::size_t s, std::size_t r) {
    edges.push_back({"e" + std::to_string(edges.size()), vertices[s], vertices[r]});
  };
  if (sink_free) {
    for (std::size_t v = 0; v < n; ++v) add(v, uniform(rng, 0, n - 1));
  }
  const std::size_t extra = uniform(rng, 0, max_edges > edges.size() ? max_edges - edges.size() : 0);
  for (std::size_t k = 0; k < extra; ++k) add(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  return Graph("R", vertices, edges);
}

/// Strongly connected and essential: a Hamiltonian cycle plus random extra
/// edges, with at least one extra edge so the graph is not a bare cycle.
inline Graph random_strongly_connected(Rng& rng, std::size_t max_vertices, std::size_t max_extra) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  std::vector<std::string> vertices;
  for (std::size_t k = 0; k < n; ++k) vertices.push_back("v" + std::to_string(k));
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<EdgeSpec> edges;
  auto add = [&](std::size_t s, std::size_t r) {
    edges.push_back({"e" + std::to_string(edges.size()), vertices[s], vertices[r]});
  };
  for (std::size_t k = 0; k < n; ++k) add(order[k], order[(k + 1) % n]);
  const std::size_t extra = uniform(rng, 1, std::max<std::size_t>(1, max_extra));
  for (std::size_t k = 0; k < extra; ++k) add(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  return Graph("S", vertices, edges);
}

/// Random path from a random vertex of length <= max_len (stops at sinks).
inline Path random_path(Rng& rng, const Graph& g, std::size_t max_len) {
  Path p = g.trivial_path(uniform(rng, 0, g.vertex_count() - 1));
  const std::size_t len = uniform(rng, 0, max_len);
  for (std::size_t k = 0; k < len; ++k) {
    auto out = g.out_edges(g.range(p));
    if (out.empty()) break;
    p.edges.push_back(out[uniform(rng, 0, out.size() - 1)]);
  }
  return p;
}

/// Random path ending at v of length <= max_len, built backwards.
inline Path random_path_to(Rng& rng, const Graph& g, VertexIndex v, std::size_t max_len) {
  std::vector<std::vector<EdgeIndex>> into(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) into[g.edge(e).range].push_back(e);
  std::vector<EdgeIndex> rev;
  VertexIndex at = v;
  const std::size_t len = uniform(rng, 0, max_len);
  for (std::size_t k = 0; k < len && !into[at].empty(); ++k) {
    EdgeIndex e = into[at][uniform(rng, 0, into[at].size() - 1)];
    rev.push_back(e);
    at = g.edge(e).source;
  }
  Path p{at, {rev.rbegin(), rev.rend()}};
  return p;
}

inline RingElement random_scalar(Rng& rng, const RingId& ring, long bound = 3) {
  auto coord = [&] {
    return mpq_class(static_cast<long>(uniform(rng, 0, 2 * bound)) - bound);
  };
  std::vector<mpq_class> c{coord()};
  if (ring.is_gaussian() || ring.is_quadratic()) c.push_back(coord());
  return RingElement(ring, c);
}

/// Random formal combination with |alpha|, |beta| <= depth.
inline RawCombination random_raw(Rng& rng, const AlgebraPtr& a, std::size_t max_terms,
                                 std::size_t depth) {
  const Graph& g = a->graph();
  RawCombination raw;
  const std::size_t terms = uniform(rng, 0, max_terms);
  for (std::size_t k = 0; k < terms; ++k) {
    Path beta = random_path(rng, g, depth);
    Path alpha = random_path_to(rng, g, g.range(beta), depth);
    raw.push_back(Term{random_scalar(rng, a->ring()), Monomial{alpha, beta}});
  }
  return raw;
}

/// Rewrites random terms with relation (v), producing a different formal sum
/// for the same algebra element. Terms whose beta already has max_depth edges
/// are kept as they are.
inline RawCombination random_equivalent(Rng& rng, const Graph& g, RawCombination raw,
                                        std::size_t max_depth = 64) {
  RawCombination out;
  for (auto& t : raw) {
    const VertexIndex r = g.range(t.mono.alpha);
    if (g.is_sink(r) || t.mono.beta.length() >= max_depth || uniform(rng, 0, 2) == 0) {
      out.push_back(std::move(t));
      continue;
    }
    // alpha beta^* = sum_e (alpha e)(beta e)^*
    for (EdgeIndex e : g.out_edges(r)) {
      Monomial m = t.mono;
      m.alpha.edges.push_back(e);
      m.beta.edges.push_back(e);
      out.push_back(Term{t.coeff, std::move(m)});
    }
  }
  // Split a coefficient into two summands of the same monomial.
  if (!out.empty() && uniform(rng, 0, 1) == 0) {
    std::size_t k = uniform(rng, 0, out.size() - 1);
    RingElement part = random_scalar(rng, out[k].coeff.ring());
    out[k].coeff -= part;
    out.push_back(Term{part, out[k].mono});
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

/// A family of paths whose projections sum to 1: start from all vertices and
/// repeatedly replace a member by its one-edge extensions.
inline std::vector<Path> random_resolution(Rng& rng, const Graph& g, std::size_t expansions,
                                           std::size_t max_len = 4) {
  std::vector<Path> family;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) family.push_back(g.trivial_path(v));
  for (std::size_t k = 0; k < expansions; ++k) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (!g.is_sink(g.range(family[i])) && family[i].length() < max_len) open.push_back(i);
    }
    if (open.empty()) break;
    std::size_t i = open[uniform(rng, 0, open.size() - 1)];
    Path p = family[i];
    family.erase(family.begin() + static_cast<long>(i));
    for (EdgeIndex e : g.out_edges(g.range(p))) {
      Path q = p;
      q.edges.push_back(e);
      family.push_back(std::move(q));
    }
  }
  std::shuffle(family.begin(), family.end(), rng);
  return family;
}

/// Units lambda with lambda conj(lambda) = 1 that the ring is known to contain.
inline std::vector<RingElement> unit_coefficients(const RingId& ring) {
  std::vector<RingElement> out{RingElement::one(ring), -RingElement::one(ring)};
  if (ring.is_gaussian()) {
    out.push_back(RingElement::unit_imaginary(ring));
    out.push_back(-RingElement::unit_imaginary(ring));
  }
  return out;
}

/// Random standard-form triples: two resolutions matched bijectively along
/// range vertices, with random unit coefficients.
inline std::vector<StandardTriple> random_standard_triples(Rng& rng, const Graph& g,
                                                           const RingId& ring,
                                                           std::size_t max_expansions = 4) {
  const auto units = unit_coefficients(ring);
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto alphas = random_resolution(rng, g, uniform(rng, 0, max_expansions));
    auto betas = random_resolution(rng, g, uniform(rng, 0, max_expansions));
    std::map<VertexIndex, std::vector<Path>> by_range_a, by_range_b;
    for (auto& p : alphas) by_range_a[g.range(p)].push_back(p);
    for (auto& p : betas) by_range_b[g.range(p)].push_back(p);
    bool match = by_range_a.size() == by_range_b.size();
    for (auto& [v, list] : by_range_a) {
      match = match && by_range_b.count(v) && by_range_b[v].size() == list.size();
    }
    if (!match && attempt + 1 < 200) continue;
    if (!match) by_range_b = by_range_a;  // fall back to a range-preserving permutation
    std::vector<StandardTriple> out;
    for (auto& [v, list] : by_range_a) {
      auto& partners = by_range_b[v];
      std::shuffle(partners.begin(), partners.end(), rng);
      for (std::size_t i = 0; i < list.size(); ++i) {
        out.push_back({units[uniform(rng, 0, units.size() - 1)], list[i], partners[i]});
      }
    }
    return out;
  }
  return {};
}

/// u q u^* with u a random standard-form unitary and q a sum of projections
/// of a random sub-family of a resolution.
inline Element random_conjugated_projection(Rng& rng, const AlgebraPtr& a) {
  const Graph& g = a->graph();
  auto triples = random_standard_triples(rng, g, a->ring(), 3);
  Element u = build_unitary(a, triples);
  auto family = random_resolution(rng, g, uniform(rng, 0, 4));
  std::vector<Path> chosen;
  for (auto& p : family) {
    if (uniform(rng, 0, 1)) chosen.push_back(p);
  }
  Element q = Element::projection_sum(a, chosen);
  return u * q * u.star();
}

}  // namespace lpa::testing
