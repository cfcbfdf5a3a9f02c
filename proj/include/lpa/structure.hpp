#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"

namespace lpa {

bool is_projection(const Element& x);
bool is_unitary(const Element& x);

/// One summand lambda * alpha beta^* of a unitary in standard form.
struct StandardTriple {
  RingElement lambda;
  Path alpha;
  Path beta;
};

struct StandardForm {
  std::vector<StandardTriple> triples;
};

/// Paths beta_i with p = sum beta_i beta_i^* and beta_i^* beta_j = 0 for i != j.
struct DiagonalDecomposition {
  std::vector<Path> paths;
};

class StructureError : public std::runtime_error {
 public:
  enum class Kind {
    NotUnitary,
    NotAProjection,
    RingLacksEup,
    NotStandardizable,
    NotAResolution,      // sum alpha alpha^* != 1
    BetaNotResolution,   // sum beta beta^* != 1
    NonUnitCoefficient,  // lambda conj(lambda) != 1
    InvalidHomomorphism,
    InternalAssertion,
  };

  StructureError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Enumerator name, e.g. "NotStandardizable".
std::string to_string(StructureError::Kind kind);

struct OrthogonalityResult {
  bool confirmed = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // indices i != j with a_i^* a_j != 0
};

/// Checks a_i^* a_j = 0 for i != j given sum a_i a_i^* = 1; throws
/// StructureError(NotAResolution) when the family does not resolve the unit.
OrthogonalityResult orthogonality_from_resolution(const AlgebraPtr& a, std::span<const Path> paths);

/// sum lambda_i alpha_i beta_i^*, after checking both path families resolve
/// the unit and every lambda has norm one.
Element build_unitary(const AlgebraPtr& a, std::span<const StandardTriple> triples);

struct StandardFormOptions {
  /// Skip the EUP hypothesis check (used to exhibit counterexamples).
  bool override_eup = false;
};

/// Expands u to its minimal uniform beta-depth, then validates the result.
StandardForm standard_form(const Element& u, StandardFormOptions options = {});

/// Element rebuilt from a standard form.
Element rebuild(const AlgebraPtr& a, const StandardForm& form);

DiagonalDecomposition diagonalize_projection(const Element& p);

/// Images of the generators of L_R(E) in L_R(F). The image of e^* is always
/// star(image of e).
struct GeneratorImages {
  Graph source;
  AlgebraPtr target;
  std::vector<std::optional<Element>> vertex_images;
  std::vector<std::optional<Element>> edge_images;

  GeneratorImages(Graph source_graph, AlgebraPtr target_algebra);
  void set_vertex(VertexIndex v, Element x);
  void set_edge(EdgeIndex e, Element x);
  /// Image of a path as a product of generator images.
  Element image_of(const Path& p) const;
};

struct HomomorphismCheck {
  bool valid = true;
  std::string relation;  // "idempotent", "orthogonal", "(i)" ... "(v)"
  std::string where;     // generator names involved
};

HomomorphismCheck check_homomorphism(const GeneratorImages& images);

struct DiagonalPreservation {
  bool preserved = true;
  std::optional<Path> witness;
};

/// Tests that the image of alpha alpha^* is diagonal for every path of length
/// at most depth. Throws StructureError(InvalidHomomorphism) if the images do
/// not define a homomorphism.
DiagonalPreservation check_diagonal_preservation(const GeneratorImages& images, std::size_t depth);

}  // namespace lpa
