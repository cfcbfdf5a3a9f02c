#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/ring.hpp"

namespace lpa {

class AlgebraMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The monomial alpha beta^*; well formed when both paths end at one vertex.
struct Monomial {
  Path alpha;
  Path beta;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// One summand lambda * alpha beta^* of a formal (unreduced) combination.
struct Term {
  RingElement coeff;
  Monomial mono;
};

using RawCombination = std::vector<Term>;

/// L_R(E) for a finite graph E and coefficient ring R. Holds the special-edge
/// choice (smallest outgoing edge name at each non-sink vertex) that selects
/// the canonical basis.
class LeavittAlgebra {
 public:
  LeavittAlgebra(Graph graph, RingId ring);

  const Graph& graph() const { return graph_; }
  const RingId& ring() const { return ring_; }

  std::optional<EdgeIndex> special_edge(VertexIndex v) const { return special_.at(v); }
  bool is_special(EdgeIndex e) const { return is_special_.at(e); }

  /// alpha and beta both end in the same special edge.
  bool reducible(const Monomial& m) const;
  bool well_formed(const Monomial& m) const;

  bool compatible(const LeavittAlgebra& other) const {
    return this == &other || (ring_ == other.ring_ && graph_.same_structure(other.graph_));
  }

 private:
  Graph graph_;
  RingId ring_;
  std::vector<std::optional<EdgeIndex>> special_;
  std::vector<bool> is_special_;
};

using AlgebraPtr = std::shared_ptr<const LeavittAlgebra>;

AlgebraPtr make_algebra(Graph graph, RingId ring);

/// Element of L_R(E) in canonical normal form: a finitely supported map from
/// basis monomials to nonzero coefficients.
class Element {
 public:
  using TermMap = std::map<Monomial, RingElement>;

  explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  static Element zero(const AlgebraPtr& a) { return Element(a); }
  static Element unit(const AlgebraPtr& a);
  static Element vertex(const AlgebraPtr& a, VertexIndex v);
  static Element edge(const AlgebraPtr& a, EdgeIndex e);
  static Element edge_star(const AlgebraPtr& a, EdgeIndex e);
  static Element scalar(const AlgebraPtr& a, const RingElement& lambda);
  /// lambda * alpha beta^*, reduced.
  static Element monomial(const AlgebraPtr& a, const Path& alpha, const Path& beta,
                          const RingElement& lambda);
  static Element monomial(const AlgebraPtr& a, const Path& alpha, const Path& beta);
  /// sum over paths of p p^*.
  static Element projection_sum(const AlgebraPtr& a, std::span<const Path> paths);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Graph& graph() const { return algebra_->graph(); }
  const RingId& ring() const { return algebra_->ring(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t max_beta_length() const;
  std::size_t max_alpha_length() const;

  Element star() const;

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const RingElement& lambda, const Element& x);

  /// Exact comparison of canonical term maps. Throws AlgebraMismatch.
  friend bool operator==(const Element& a, const Element& b);

 private:
  friend Element reduce(const AlgebraPtr& a, const RawCombination& raw);
  friend Element reduce_shuffled(const AlgebraPtr& a, const RawCombination& raw,
                                 std::uint64_t seed);
  void check_compatible(const Element& other) const;

  AlgebraPtr algebra_;
  TermMap terms_;
};

/// Rewrites every monomial (a'c)(b'c)^* with c special at v = r(a') into
/// a'b'^* - sum_{e in s^-1(v), e != c} (a'e)(b'e)^* until none remain.
Element reduce(const AlgebraPtr& a, const RawCombination& raw);
/// Same rewriting with the work list processed in a random order.
Element reduce_shuffled(const AlgebraPtr& a, const RawCombination& raw, std::uint64_t seed);

inline Element mul(const Element& x, const Element& y) { return x * y; }
inline Element add(const Element& x, const Element& y) { return x + y; }
inline Element scale(const RingElement& lambda, const Element& x) { return lambda * x; }
inline Element star(const Element& x) { return x.star(); }
inline bool equals(const Element& x, const Element& y) { return x == y; }

/// Raw product of two monomials: (ab*)(cd*) = (a c')d* if c = b c',
/// a (d b')* if b = c b', nothing otherwise.
std::optional<Monomial> multiply_monomials(const Graph& g, const Monomial& x, const Monomial& y);

RawCombination to_raw(const Element& x);

/// Splits x by the grading |alpha| - |beta|.
std::map<long, Element> degree_components(const Element& x);

/// Rewrites x as a formal sum whose beta-paths all have length k or are
/// shorter and end at a sink; distinct triples have distinct (mu, nu).
/// Throws std::invalid_argument if k is below the longest beta in x.
RawCombination expand_to_depth(const Element& x, std::size_t k);

/// Keeps the basis terms with alpha = beta.
Element diagonal_part(const Element& x);
bool is_diagonal(const Element& x);

/// Decides x == y from the action on paths of length N = max |beta| (or
/// shorter ones ending at a sink), where ab^* sends b c to a c and kills
/// paths not starting with b. Independent of the rewriting in reduce().
bool oracle_equals(const Graph& g, const RawCombination& x, const RawCombination& y);
bool oracle_equals(const Element& x, const Element& y);

/// Basis monomials with |alpha|, |beta| <= max_length.
std::vector<Monomial> basis_monomials(const LeavittAlgebra& a, std::size_t max_length);

}  // namespace lpa
