#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/matrix.hpp"
#include "lpa/ring.hpp"

namespace lpa {

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... and
/// zeros last.
struct SmithNormalForm {
  std::vector<mpz_class> factors;  // the diagonal of D, length min(rows, cols)
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

struct FlowInvariant {
  std::vector<mpz_class> bf_factors;  // invariant factors of I - A other than 1
  int det_sign = 0;
  mpz_class det_value;
};

FlowInvariant flow_invariant(const Graph& g);

/// Short form of a Bowen-Franks group: "trivial", or "Z/2 + Z" style sums.
std::string describe_bf(const std::vector<mpz_class>& factors);

enum class Verdict {
  CertifiedNotStarIsomorphic,
  DistinguishedByGroup,
  Inconclusive,
  HypothesesNotMet,
};

std::string to_string(Verdict v);

struct ComparisonReport {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> failed_hypotheses;
  FlowInvariant invariant_e;
  FlowInvariant invariant_f;
};

/// Applies the determinant-sign obstruction to *-isomorphism of L_R(E) and
/// L_R(F) for finite, essential, strongly connected graphs with Condition (L)
/// over an EUP ring.
ComparisonReport compare_for_star_isomorphism(const Graph& e, const Graph& f, const RingId& ring);

}  // namespace lpa
