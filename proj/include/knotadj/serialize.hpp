#pragma once

#include <json.hpp>

#include "knotadj/adjacency.hpp"

namespace knotadj {

nlohmann::json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const nlohmann::json& j, char var);

nlohmann::json fraction_to_json(const Fraction& f);
Fraction fraction_from_json(const nlohmann::json& j);

nlohmann::json fingerprint_to_json(const Fingerprint& fp);

nlohmann::json witness_to_json(const AdjacencyWitness& w);

}  // namespace knotadj
