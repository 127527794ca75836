#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "hazardkit/circuit.hpp"
#include "hazardkit/detectors.hpp"

namespace hazardkit {

/// Circuit document: {"num_vars": N, "gates": [{"id", "kind", "children" |
/// "var"/"neg"}], "output": k, "meta": {...}}. Gate ids equal positions;
/// children reference earlier ids. Round-trips losslessly.
nlohmann::json circuit_to_json(const Circuit& c, nlohmann::json meta = {});
Circuit circuit_from_json(const nlohmann::json& doc);

std::string method_name(DetectionMethod m);
std::string kind_name(HazardKind k);

/// Analysis report: {"result", "kind", "witness", "method", "elapsed_ms", "meta"}.
nlohmann::json report_to_json(const HazardReport& r, double elapsed_ms, nlohmann::json meta = {});

}  // namespace hazardkit
