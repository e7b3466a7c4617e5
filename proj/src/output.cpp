#include "qslit/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qslit/config.hpp"
#include "qslit/version.hpp"

namespace qslit::output {

std::string metadata_line(const ScenarioConfig& config) {
    std::string line = "# qslit ";
    line += kVersion;
    line += " config=";
    line += config_hash(config);
    if (config.seed_set) {
        line += " seed=";
        line += std::to_string(config.seed);
    }
    line += "\n";
    return line;
}

std::string curve_csv(const std::string& x_name, const std::string& y_name,
                      std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("curve_csv: column lengths differ");
    std::string out = x_name + "," + y_name + "\n";
    char line[128];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::snprintf(line, sizeof(line), "%.12g,%.12g\n", xs[i], ys[i]);
        out += line;
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

} // namespace qslit::output
