#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qslit/scenario.hpp"

namespace qslit {

/// Parses and validates a scenario. Unknown fields are rejected and every
/// violation is collected before throwing ConfigError, so one round trip
/// shows all problems.
ScenarioConfig parse_config(const nlohmann::json& doc);

/// Reads `path` and parses it. File-level and JSON syntax problems are
/// reported as ConfigError with the parser's position diagnostics.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical serialization of a config (sorted keys, fixed field set).
/// Equal configs serialize identically.
std::string canonical_config(const ScenarioConfig& config);

/// FNV-1a 64-bit hash of the canonical serialization, as 16 hex digits.
std::string config_hash(const ScenarioConfig& config);

} // namespace qslit
