#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "qslit/scenario.hpp"

namespace qslit::output {

/// Comment line stamped into every CSV artifact: tool version, config hash
/// and seed, so artifacts are traceable to their inputs.
std::string metadata_line(const ScenarioConfig& config);

/// Two-column CSV body: header plus coordinate,density rows.
std::string curve_csv(const std::string& x_name, const std::string& y_name,
                      std::span<const double> xs, std::span<const double> ys);

/// All artifact writes go through here: write to a temp file in the target
/// directory, then rename into place, so readers never see partial files.
void write_text(const std::filesystem::path& path, const std::string& content);

} // namespace qslit::output
