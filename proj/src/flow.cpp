#include "lpa/flow.hpp"

#include <algorithm>

namespace lpa {

namespace {

// Smallest nonzero |entry| in the block starting at (t, t).
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& row, std::size_t& col) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < a.rows(); ++i) {
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      mpz_class v = abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        row = i;
        col = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = t, pc = t;
    if (!find_pivot(a, t, pr, pc)) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      bool changed = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) {
          a.swap_rows(t, i);
          u.swap_rows(t, i);
          changed = true;
        }
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) {
          a.swap_cols(t, j);
          v.swap_cols(t, j);
          changed = true;
        }
      }
      if (changed) continue;
      // The pivot must divide the remaining block; otherwise fold in the
      // offending row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithNormalForm out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) out.factors.push_back(a(t, t));
  if (u * m * v != a) throw std::logic_error("Smith normal form transforms do not reproduce D");
  out.U = std::move(u);
  out.V = std::move(v);
  out.D = std::move(a);
  return out;
}

FlowInvariant flow_invariant(const Graph& g) {
  const IntMatrix m = IntMatrix::identity(g.vertex_count()) - adjacency(g);
  FlowInvariant out;
  out.det_value = m.determinant();
  out.det_sign = sgn(out.det_value);
  for (auto& d : smith_normal_form(m).factors) {
    if (d != 1) out.bf_factors.push_back(std::move(d));
  }
  return out;
}

std::string describe_bf(const std::vector<mpz_class>& factors) {
  if (factors.empty()) return "trivial";
  std::string out;
  for (const auto& d : factors) {
    if (!out.empty()) out += " + ";
    out += d == 0 ? std::string("Z") : "Z/" + d.get_str();
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedNotStarIsomorphic: return "CertifiedNotStarIsomorphic";
    case Verdict::DistinguishedByGroup: return "DistinguishedByGroup";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::HypothesesNotMet: return "HypothesesNotMet";
  }
  return "?";
}

ComparisonReport compare_for_star_isomorphism(const Graph& e, const Graph& f, const RingId& ring) {
  ComparisonReport report;
  report.invariant_e = flow_invariant(e);
  report.invariant_f = flow_invariant(f);

  auto check_graph = [&](const Graph& g, const std::string& label) {
    const GraphPredicates p = graph_predicates(g);
    if (p.has_sinks) report.failed_hypotheses.push_back(label + " has sinks");
    if (p.has_sources) report.failed_hypotheses.push_back(label + " has sources");
    if (!p.strongly_connected) report.failed_hypotheses.push_back(label + " is not strongly connected");
    if (!p.condition_L) report.failed_hypotheses.push_back(label + " fails Condition (L)");
  };
  check_graph(e, "graph E");
  check_graph(f, "graph F");
  if (!has_eup(ring)) {
    report.failed_hypotheses.push_back("ring " + ring.name() +
                                       " lacks an essentially unique partition of the unit");
  }

  if (!report.failed_hypotheses.empty()) {
    report.verdict = Verdict::HypothesesNotMet;
  } else if (report.invariant_e.det_sign != report.invariant_f.det_sign) {
    report.verdict = Verdict::CertifiedNotStarIsomorphic;
  } else if (report.invariant_e.bf_factors != report.invariant_f.bf_factors) {
    report.verdict = Verdict::DistinguishedByGroup;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

}  // namespace lpa
