#include "lpa/algebra.hpp"

#include <algorithm>
#include <random>

namespace lpa {

LeavittAlgebra::LeavittAlgebra(Graph graph, RingId ring)
    : graph_(std::move(graph)), ring_(ring) {
  special_.resize(graph_.vertex_count());
  is_special_.assign(graph_.edge_count(), false);
  for (VertexIndex v = 0; v < graph_.vertex_count(); ++v) {
    auto out = graph_.out_edges(v);
    if (!out.empty()) {
      special_[v] = out.front();  // out_edges is sorted by name
      is_special_[out.front()] = true;
    }
  }
}

bool LeavittAlgebra::reducible(const Monomial& m) const {
  if (m.alpha.edges.empty() || m.beta.edges.empty()) return false;
  EdgeIndex c = m.alpha.edges.back();
  return c == m.beta.edges.back() && is_special_[c];
}

bool LeavittAlgebra::well_formed(const Monomial& m) const {
  return graph_.is_valid(m.alpha) && graph_.is_valid(m.beta) &&
         graph_.range(m.alpha) == graph_.range(m.beta);
}

AlgebraPtr make_algebra(Graph graph, RingId ring) {
  return std::make_shared<const LeavittAlgebra>(std::move(graph), ring);
}

namespace {

void check_raw(const LeavittAlgebra& a, const RawCombination& raw) {
  for (const auto& t : raw) {
    if (t.coeff.ring() != a.ring()) {
      throw RingMismatch("coefficient ring " + t.coeff.ring().name() + " does not match " +
                         a.ring().name());
    }
    if (!a.well_formed(t.mono)) throw GraphError("malformed monomial");
  }
}

// One rewrite step: pushes the replacement terms of a reducible monomial.
template <class Sink>
void rewrite(const LeavittAlgebra& a, const Term& t, Sink&& push) {
  const Graph& g = a.graph();
  Monomial shorter = t.mono;
  EdgeIndex c = shorter.alpha.edges.back();
  shorter.alpha.edges.pop_back();
  shorter.beta.edges.pop_back();
  VertexIndex v = g.edge(c).source;
  for (EdgeIndex e : g.out_edges(v)) {
    if (e == c) continue;
    Monomial m = shorter;
    m.alpha.edges.push_back(e);
    m.beta.edges.push_back(e);
    push(Term{-t.coeff, std::move(m)});
  }
  push(Term{t.coeff, std::move(shorter)});
}

void accumulate(Element::TermMap& acc, const Term& t) {
  auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
  if (!inserted) it->second += t.coeff;
}

void drop_zeros(Element::TermMap& acc) {
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace

Element reduce(const AlgebraPtr& a, const RawCombination& raw) {
  check_raw(*a, raw);
  Element out(a);
  std::vector<Term> work(raw.rbegin(), raw.rend());
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    if (t.coeff.is_zero()) continue;
    if (a->reducible(t.mono)) {
      rewrite(*a, t, [&](Term&& s) { work.push_back(std::move(s)); });
    } else {
      accumulate(out.terms_, t);
    }
  }
  drop_zeros(out.terms_);
  return out;
}

Element reduce_shuffled(const AlgebraPtr& a, const RawCombination& raw, std::uint64_t seed) {
  check_raw(*a, raw);
  std::mt19937_64 rng(seed);
  Element out(a);
  std::vector<Term> work = raw;
  while (!work.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, work.size() - 1);
    std::size_t k = pick(rng);
    std::swap(work[k], work.back());
    Term t = std::move(work.back());
    work.pop_back();
    if (a->reducible(t.mono)) {
      rewrite(*a, t, [&](Term&& s) { work.push_back(std::move(s)); });
    } else {
      accumulate(out.terms_, t);
      // Occasionally flush cancellations early to vary the intermediate state.
      if (rng() % 4 == 0) drop_zeros(out.terms_);
    }
  }
  drop_zeros(out.terms_);
  return out;
}

Element Element::unit(const AlgebraPtr& a) {
  RawCombination raw;
  for (VertexIndex v = 0; v < a->graph().vertex_count(); ++v) {
    Path p = a->graph().trivial_path(v);
    raw.push_back(Term{RingElement::one(a->ring()), Monomial{p, p}});
  }
  return reduce(a, raw);
}

Element Element::vertex(const AlgebraPtr& a, VertexIndex v) {
  Path p = a->graph().trivial_path(v);
  return monomial(a, p, p);
}

Element Element::edge(const AlgebraPtr& a, EdgeIndex e) {
  const Graph& g = a->graph();
  return monomial(a, g.edge_path(e), g.trivial_path(g.edge(e).range));
}

Element Element::edge_star(const AlgebraPtr& a, EdgeIndex e) {
  const Graph& g = a->graph();
  return monomial(a, g.trivial_path(g.edge(e).range), g.edge_path(e));
}

Element Element::scalar(const AlgebraPtr& a, const RingElement& lambda) {
  return lambda * unit(a);
}

Element Element::monomial(const AlgebraPtr& a, const Path& alpha, const Path& beta,
                          const RingElement& lambda) {
  return reduce(a, {Term{lambda, Monomial{alpha, beta}}});
}

Element Element::monomial(const AlgebraPtr& a, const Path& alpha, const Path& beta) {
  return monomial(a, alpha, beta, RingElement::one(a->ring()));
}

Element Element::projection_sum(const AlgebraPtr& a, std::span<const Path> paths) {
  RawCombination raw;
  for (const auto& p : paths) raw.push_back(Term{RingElement::one(a->ring()), Monomial{p, p}});
  return reduce(a, raw);
}

std::size_t Element::max_beta_length() const {
  std::size_t k = 0;
  for (const auto& [m, c] : terms_) k = std::max(k, m.beta.length());
  return k;
}

std::size_t Element::max_alpha_length() const {
  std::size_t k = 0;
  for (const auto& [m, c] : terms_) k = std::max(k, m.alpha.length());
  return k;
}

void Element::check_compatible(const Element& other) const {
  if (!algebra_->compatible(*other.algebra_)) {
    throw AlgebraMismatch("elements belong to different algebras (" + algebra_->ring().name() +
                          " over '" + algebra_->graph().name() + "' vs " +
                          other.algebra_->ring().name() + " over '" +
                          other.algebra_->graph().name() + "')");
  }
}

Element Element::star() const {
  RawCombination raw;
  raw.reserve(terms_.size());
  for (const auto& [m, c] : terms_) raw.push_back(Term{c.conj(), Monomial{m.beta, m.alpha}});
  return reduce(algebra_, raw);
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) accumulate(terms_, Term{c, m});
  drop_zeros(terms_);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) accumulate(terms_, Term{-c, m});
  drop_zeros(terms_);
  return *this;
}

std::optional<Monomial> multiply_monomials(const Graph& g, const Monomial& x, const Monomial& y) {
  (void)g;
  const Path& beta = x.beta;
  const Path& gamma = y.alpha;
  if (is_prefix(beta, gamma)) {
    Monomial out{x.alpha, y.beta};
    out.alpha.edges.insert(out.alpha.edges.end(), gamma.edges.begin() + beta.length(),
                           gamma.edges.end());
    return out;
  }
  if (is_prefix(gamma, beta)) {
    Monomial out{x.alpha, y.beta};
    out.beta.edges.insert(out.beta.edges.end(), beta.edges.begin() + gamma.length(),
                          beta.edges.end());
    return out;
  }
  return std::nullopt;
}

Element operator*(const Element& a, const Element& b) {
  a.check_compatible(b);
  RawCombination raw;
  const Graph& g = a.graph();
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) {
      if (auto m = multiply_monomials(g, m1, m2)) raw.push_back(Term{c1 * c2, std::move(*m)});
    }
  }
  return reduce(a.algebra_, raw);
}

Element operator*(const RingElement& lambda, const Element& x) {
  if (lambda.ring() != x.ring()) {
    throw RingMismatch("scalar from " + lambda.ring().name() + " applied to element over " +
                       x.ring().name());
  }
  Element out(x.algebra_);
  if (lambda.is_zero()) return out;
  for (const auto& [m, c] : x.terms_) {
    RingElement p = lambda * c;
    if (!p.is_zero()) out.terms_.emplace(m, std::move(p));
  }
  return out;
}

bool operator==(const Element& a, const Element& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

RawCombination to_raw(const Element& x) {
  RawCombination raw;
  raw.reserve(x.terms().size());
  for (const auto& [m, c] : x.terms()) raw.push_back(Term{c, m});
  return raw;
}

std::map<long, Element> degree_components(const Element& x) {
  std::map<long, RawCombination> split;
  for (const auto& [m, c] : x.terms()) {
    long deg = static_cast<long>(m.alpha.length()) - static_cast<long>(m.beta.length());
    split[deg].push_back(Term{c, m});
  }
  std::map<long, Element> out;
  for (auto& [deg, raw] : split) out.emplace(deg, reduce(x.algebra(), raw));
  return out;
}

RawCombination expand_to_depth(const Element& x, std::size_t k) {
  if (k < x.max_beta_length()) {
    throw std::invalid_argument("expansion depth " + std::to_string(k) +
                                " is below the longest beta path " +
                                std::to_string(x.max_beta_length()));
  }
  const Graph& g = x.graph();
  std::map<Monomial, RingElement> acc;
  for (const auto& [m, c] : x.terms()) {
    VertexIndex r = g.range(m.alpha);
    for (const Path& gamma : enumerate_X(g, r, k - m.beta.length())) {
      Monomial ext{g.concat(m.alpha, gamma), g.concat(m.beta, gamma)};
      auto [it, inserted] = acc.try_emplace(std::move(ext), c);
      if (!inserted) it->second += c;
    }
  }
  std::vector<Term> out;
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{std::move(c), m});
  }
  std::sort(out.begin(), out.end(), [&](const Term& s, const Term& t) {
    if (s.mono.beta != t.mono.beta) return g.path_less(s.mono.beta, t.mono.beta);
    return g.path_less(s.mono.alpha, t.mono.alpha);
  });
  return out;
}

Element diagonal_part(const Element& x) {
  RawCombination raw;
  for (const auto& [m, c] : x.terms()) {
    if (m.alpha == m.beta) raw.push_back(Term{c, m});
  }
  return reduce(x.algebra(), raw);
}

bool is_diagonal(const Element& x) {
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [](const auto& kv) { return kv.first.alpha == kv.first.beta; });
}

namespace {

using PathCombination = std::map<Path, RingElement>;

PathCombination act(const RawCombination& x, const Path& gamma) {
  PathCombination out;
  for (const auto& t : x) {
    if (!is_prefix(t.mono.beta, gamma)) continue;
    Path image = t.mono.alpha;
    image.edges.insert(image.edges.end(), gamma.edges.begin() + t.mono.beta.length(),
                       gamma.edges.end());
    auto [it, inserted] = out.try_emplace(std::move(image), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

bool oracle_equals(const Graph& g, const RawCombination& x, const RawCombination& y) {
  std::size_t depth = 0;
  for (const auto& t : x) depth = std::max(depth, t.mono.beta.length());
  for (const auto& t : y) depth = std::max(depth, t.mono.beta.length());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (const Path& gamma : enumerate_X(g, v, depth)) {
      if (act(x, gamma) != act(y, gamma)) return false;
    }
  }
  return true;
}

bool oracle_equals(const Element& x, const Element& y) {
  if (!x.algebra()->compatible(*y.algebra())) {
    throw AlgebraMismatch("oracle_equals: elements belong to different algebras");
  }
  return oracle_equals(x.graph(), to_raw(x), to_raw(y));
}

std::vector<Monomial> basis_monomials(const LeavittAlgebra& a, std::size_t max_length) {
  const Graph& g = a.graph();
  // All paths of length <= max_length grouped by range vertex.
  std::vector<std::vector<Path>> ending_at(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Path> frontier{g.trivial_path(v)};
    for (std::size_t len = 0; len <= max_length && !frontier.empty(); ++len) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        ending_at[g.range(p)].push_back(p);
        for (EdgeIndex e : g.out_edges(g.range(p))) {
          Path q = p;
          q.edges.push_back(e);
          next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
  }
  std::vector<Monomial> out;
  for (const auto& group : ending_at) {
    for (const auto& alpha : group) {
      for (const auto& beta : group) {
        Monomial m{alpha, beta};
        if (!a.reducible(m)) out.push_back(std::move(m));
      }
    }
  }
  return out;
}

}  // namespace lpa
