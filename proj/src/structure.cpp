#include "lpa/structure.hpp"

#include <algorithm>
#include <set>

namespace lpa {

std::string to_string(StructureError::Kind kind) {
  using Kind = StructureError::Kind;
  switch (kind) {
    case Kind::NotUnitary: return "NotUnitary";
    case Kind::NotAProjection: return "NotAProjection";
    case Kind::RingLacksEup: return "RingLacksEup";
    case Kind::NotStandardizable: return "NotStandardizable";
    case Kind::NotAResolution: return "NotAResolution";
    case Kind::BetaNotResolution: return "BetaNotResolution";
    case Kind::NonUnitCoefficient: return "NonUnitCoefficient";
    case Kind::InvalidHomomorphism: return "InvalidHomomorphism";
    case Kind::InternalAssertion: return "InternalAssertion";
  }
  return "?";
}

bool is_projection(const Element& x) { return x == x.star() && x * x == x; }

bool is_unitary(const Element& x) {
  const Element one = Element::unit(x.algebra());
  const Element xs = x.star();
  return x * xs == one && xs * x == one;
}

OrthogonalityResult orthogonality_from_resolution(const AlgebraPtr& a, std::span<const Path> paths) {
  if (Element::projection_sum(a, paths) != Element::unit(a)) {
    throw StructureError(StructureError::Kind::NotAResolution,
                         "the projections of the path family do not sum to 1");
  }
  const Graph& g = a->graph();
  OrthogonalityResult out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Element ai_star = Element::monomial(a, g.trivial_path(g.range(paths[i])), paths[i]);
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (i == j) continue;
      const Element aj = Element::monomial(a, paths[j], g.trivial_path(g.range(paths[j])));
      if (!(ai_star * aj).is_zero()) {
        out.confirmed = false;
        out.witness = std::make_pair(i, j);
        return out;
      }
    }
  }
  return out;
}

Element build_unitary(const AlgebraPtr& a, std::span<const StandardTriple> triples) {
  std::vector<Path> alphas, betas;
  RawCombination raw;
  for (const auto& t : triples) {
    if (!t.lambda.norm().is_one()) {
      throw StructureError(StructureError::Kind::NonUnitCoefficient,
                           "coefficient " + to_string(t.lambda) + " does not have norm 1");
    }
    alphas.push_back(t.alpha);
    betas.push_back(t.beta);
    raw.push_back(Term{t.lambda, Monomial{t.alpha, t.beta}});
  }
  const Element one = Element::unit(a);
  if (Element::projection_sum(a, alphas) != one) {
    throw StructureError(StructureError::Kind::NotAResolution,
                         "sum of alpha alpha^* is not 1");
  }
  if (Element::projection_sum(a, betas) != one) {
    throw StructureError(StructureError::Kind::BetaNotResolution,
                         "sum of beta beta^* is not 1");
  }
  Element u = reduce(a, raw);
  if (!is_unitary(u)) {
    throw StructureError(StructureError::Kind::InternalAssertion,
                         "element built from a valid standard form is not unitary");
  }
  return u;
}

Element rebuild(const AlgebraPtr& a, const StandardForm& form) {
  RawCombination raw;
  for (const auto& t : form.triples) raw.push_back(Term{t.lambda, Monomial{t.alpha, t.beta}});
  return reduce(a, raw);
}

StandardForm standard_form(const Element& u, StandardFormOptions options) {
  if (!is_unitary(u)) throw StructureError(StructureError::Kind::NotUnitary, "element is not unitary");
  if (!has_eup(u.ring()) && !options.override_eup) {
    throw StructureError(StructureError::Kind::RingLacksEup,
                         "ring " + u.ring().name() +
                             " lacks an essentially unique partition of the unit");
  }
  const Graph& g = u.graph();
  const AlgebraPtr& a = u.algebra();
  StandardForm form;
  for (auto& t : expand_to_depth(u, u.max_beta_length())) {
    form.triples.push_back(StandardTriple{std::move(t.coeff), std::move(t.mono.alpha),
                                          std::move(t.mono.beta)});
  }

  std::set<Path> seen;
  std::vector<Path> alphas, betas;
  for (const auto& t : form.triples) {
    if (!seen.insert(t.beta).second) {
      throw StructureError(StructureError::Kind::NotStandardizable,
                           "beta path '" + g.path_to_string(t.beta) + "' occurs in several terms");
    }
  }
  for (const auto& t : form.triples) {
    if (!t.lambda.norm().is_one()) {
      throw StructureError(StructureError::Kind::NotStandardizable,
                           "coefficient " + to_string(t.lambda) + " does not have norm 1");
    }
    alphas.push_back(t.alpha);
    betas.push_back(t.beta);
  }
  const Element one = Element::unit(a);
  if (Element::projection_sum(a, alphas) != one || Element::projection_sum(a, betas) != one) {
    throw StructureError(StructureError::Kind::NotStandardizable,
                         "path families do not resolve the unit");
  }
  if (rebuild(a, form) != u) {
    throw StructureError(StructureError::Kind::InternalAssertion,
                         "standard form does not rebuild the unitary");
  }
  return form;
}

DiagonalDecomposition diagonalize_projection(const Element& p) {
  using Kind = StructureError::Kind;
  if (!is_projection(p)) throw StructureError(Kind::NotAProjection, "element is not a projection");
  if (!has_eup(p.ring())) {
    throw StructureError(Kind::RingLacksEup,
                         "ring " + p.ring().name() +
                             " lacks an essentially unique partition of the unit");
  }
  const AlgebraPtr& a = p.algebra();
  const Graph& g = p.graph();
  const Element one = Element::unit(a);
  const Element u = RingElement::from_int(p.ring(), 2) * p - one;
  if (u != u.star() || u * u != one) {
    throw StructureError(Kind::InternalAssertion, "2p - 1 is not a self-adjoint unitary");
  }
  const RingElement plus = RingElement::one(p.ring());
  const RingElement minus = -plus;

  DiagonalDecomposition out;
  for (const auto& t : standard_form(u).triples) {
    if (t.alpha != t.beta) {
      throw StructureError(Kind::InternalAssertion,
                           "standard form of 2p - 1 pairs different paths '" +
                               g.path_to_string(t.alpha) + "' and '" + g.path_to_string(t.beta) + "'");
    }
    if (t.lambda == plus) {
      out.paths.push_back(t.beta);
    } else if (t.lambda != minus) {
      throw StructureError(Kind::InternalAssertion,
                           "standard form of 2p - 1 has coefficient " + to_string(t.lambda));
    }
  }
  std::sort(out.paths.begin(), out.paths.end(),
            [&](const Path& x, const Path& y) { return g.path_less(x, y); });

  if (Element::projection_sum(a, out.paths) != p) {
    throw StructureError(Kind::InternalAssertion, "decomposition does not reconstruct p");
  }
  // If beta_i^* beta_j != 0 then one path extends the other, and in
  // lexicographic order every path in between extends the shorter one too, so
  // neighbours suffice.
  std::vector<Path> lex = out.paths;
  std::sort(lex.begin(), lex.end());
  for (std::size_t i = 0; i + 1 < lex.size(); ++i) {
    const Monomial star_i{g.trivial_path(g.range(lex[i])), lex[i]};
    const Monomial next{lex[i + 1], g.trivial_path(g.range(lex[i + 1]))};
    if (multiply_monomials(g, star_i, next)) {
      throw StructureError(Kind::InternalAssertion, "decomposition paths are not orthogonal");
    }
  }
  return out;
}

GeneratorImages::GeneratorImages(Graph source_graph, AlgebraPtr target_algebra)
    : source(std::move(source_graph)), target(std::move(target_algebra)) {
  vertex_images.resize(source.vertex_count());
  edge_images.resize(source.edge_count());
}

namespace {

void check_target(const AlgebraPtr& target, const Element& x) {
  if (!target->compatible(*x.algebra())) {
    throw AlgebraMismatch("generator image does not lie in the target algebra " +
                          target->ring().name() + " over '" + target->graph().name() + "'");
  }
}

}  // namespace

void GeneratorImages::set_vertex(VertexIndex v, Element x) {
  check_target(target, x);
  vertex_images.at(v) = std::move(x);
}

void GeneratorImages::set_edge(EdgeIndex e, Element x) {
  check_target(target, x);
  edge_images.at(e) = std::move(x);
}

Element GeneratorImages::image_of(const Path& p) const {
  if (p.trivial()) {
    if (!vertex_images.at(p.base)) {
      throw std::invalid_argument("no image for vertex '" + source.vertex_name(p.base) + "'");
    }
    return *vertex_images[p.base];
  }
  std::optional<Element> out;
  for (EdgeIndex e : p.edges) {
    if (!edge_images.at(e)) {
      throw std::invalid_argument("no image for edge '" + source.edge(e).name + "'");
    }
    out = out ? *out * *edge_images[e] : *edge_images[e];
  }
  return *out;
}

HomomorphismCheck check_homomorphism(const GeneratorImages& images) {
  const Graph& g = images.source;
  auto fail = [](std::string relation, std::string where) {
    return HomomorphismCheck{false, std::move(relation), std::move(where)};
  };
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!images.vertex_images[v]) return fail("missing image", g.vertex_name(v));
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!images.edge_images[e]) return fail("missing image", g.edge(e).name);
  }
  const auto& P = images.vertex_images;
  const auto& X = images.edge_images;

  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (*P[v] * *P[v] != *P[v] || P[v]->star() != *P[v]) {
      return fail("vertex image is not a projection", g.vertex_name(v));
    }
    for (VertexIndex w = v + 1; w < g.vertex_count(); ++w) {
      if (!(*P[v] * *P[w]).is_zero()) {
        return fail("vertex images not orthogonal", g.vertex_name(v) + ", " + g.vertex_name(w));
      }
    }
  }
  std::vector<Element> stars;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) stars.push_back(X[e]->star());

  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
      if (e != f && !(stars[e] * *X[f]).is_zero()) {
        return fail("(i)", g.edge(e).name + "^* " + g.edge(f).name);
      }
    }
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (stars[e] * *X[e] != *P[g.edge(e).range]) return fail("(ii)", g.edge(e).name);
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const Element& s = *P[g.edge(e).source];
    const Element& r = *P[g.edge(e).range];
    if (s * *X[e] != *X[e] || *X[e] * r != *X[e]) return fail("(iii)", g.edge(e).name);
    if (stars[e] * s != stars[e] || r * stars[e] != stars[e]) return fail("(iv)", g.edge(e).name);
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) continue;
    Element sum = Element::zero(images.target);
    for (EdgeIndex e : g.out_edges(v)) sum += *X[e] * stars[e];
    if (sum != *P[v]) return fail("(v)", g.vertex_name(v));
  }
  return {};
}

DiagonalPreservation check_diagonal_preservation(const GeneratorImages& images, std::size_t depth) {
  auto hom = check_homomorphism(images);
  if (!hom.valid) {
    throw StructureError(StructureError::Kind::InvalidHomomorphism,
                         "images violate relation " + hom.relation + " at " + hom.where);
  }
  const Graph& g = images.source;
  for (std::size_t len = 0; len <= depth; ++len) {
    for (const Path& alpha : paths_of_length(g, len)) {
      const Element x = images.image_of(alpha);
      if (!is_diagonal(x * x.star())) return DiagonalPreservation{false, alpha};
    }
  }
  return {};
}

}  // namespace lpa
