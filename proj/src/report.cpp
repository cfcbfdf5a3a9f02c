#include "lpa/report.hpp"

namespace lpa {

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

namespace {

nlohmann::json factors_json(const std::vector<mpz_class>& factors) {
  auto out = nlohmann::json::array();
  for (const auto& d : factors) out.push_back(integer_json(d));
  return out;
}

}  // namespace

nlohmann::json invariant_json(const std::string& graph, const FlowInvariant& inv) {
  return {
      {"graph", graph},
      {"bf", factors_json(inv.bf_factors)},
      {"bf_group", describe_bf(inv.bf_factors)},
      {"det", integer_json(inv.det_value)},
      {"sign", inv.det_sign},
  };
}

nlohmann::json comparison_json(const std::string& graph_e, const std::string& graph_f,
                               const RingId& ring, const ComparisonReport& report) {
  return {
      {"graph_e", graph_e},
      {"graph_f", graph_f},
      {"ring", ring.name()},
      {"bf_e", factors_json(report.invariant_e.bf_factors)},
      {"bf_f", factors_json(report.invariant_f.bf_factors)},
      {"det_e", integer_json(report.invariant_e.det_value)},
      {"det_f", integer_json(report.invariant_f.det_value)},
      {"verdict", to_string(report.verdict)},
      {"failed_hypotheses", report.failed_hypotheses},
  };
}

}  // namespace lpa
