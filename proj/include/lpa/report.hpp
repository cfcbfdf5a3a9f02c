#pragma once

#include <json.hpp>

#include <string>

#include "lpa/flow.hpp"

namespace lpa {

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
nlohmann::json integer_json(const mpz_class& z);

nlohmann::json invariant_json(const std::string& graph, const FlowInvariant& inv);

/// Fields graph_e, graph_f, ring, bf_e, bf_f, det_e, det_f, verdict,
/// failed_hypotheses.
nlohmann::json comparison_json(const std::string& graph_e, const std::string& graph_f,
                               const RingId& ring, const ComparisonReport& report);

}  // namespace lpa
