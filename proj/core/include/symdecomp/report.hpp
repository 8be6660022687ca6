#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "symdecomp/decompose.hpp"

namespace symdecomp {

inline constexpr int kReportSchemaVersion = 1;

/// Matrix as nested arrays of [re, im] pairs.
nlohmann::json matrix_to_json(const Matrix& m);

nlohmann::json report_to_json(const ControllabilityReport& report,
                              const nlohmann::json& config_echo, bool emit_basis);

/// Oracle cross-checks for a group: burnside = trace = nullspace (when
/// runnable) = sum of squared block dimensions.
nlohmann::json oracle_json(const GroupSpec& spec, int n, int d,
                           const std::vector<BasisColumnRange>& ranges);

}  // namespace symdecomp
