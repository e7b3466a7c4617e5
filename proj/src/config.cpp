#include "qslit/config.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qslit/errors.hpp"

namespace qslit {

namespace {

using nlohmann::json;

class Collector {
public:
    void add(const std::string& msg) { issues_.push_back(msg); }
    bool empty() const { return issues_.empty(); }
    [[noreturn]] void raise() const { throw ConfigError(issues_); }
    void raise_if_any() const {
        if (!issues_.empty()) raise();
    }

private:
    std::vector<std::string> issues_;
};

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where, Collector& errors) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) errors.add(where + ": unknown field '" + key + "'");
}

double require_number(const json& obj, const std::string& key, const std::string& where,
                      Collector& errors, bool required = true, double fallback = 0.0) {
    if (!obj.contains(key)) {
        if (required) errors.add(where + ": missing field '" + key + "'");
        return fallback;
    }
    if (!obj[key].is_number()) {
        errors.add(where + ": field '" + key + "' must be a number");
        return fallback;
    }
    return obj[key].get<double>();
}

StateSpec parse_state(const json& obj, const std::string& where, Collector& errors) {
    StateSpec spec;
    if (!obj.is_object()) {
        errors.add(where + ": must be an object");
        return spec;
    }
    if (!obj.contains("kind") || !obj["kind"].is_string()) {
        errors.add(where + ": missing string field 'kind'");
        return spec;
    }
    try {
        spec.kind = state_kind_from_string(obj["kind"].get<std::string>());
    } catch (const std::exception& e) {
        errors.add(where + ": " + e.what());
        return spec;
    }

    std::set<std::string> allowed{"kind"};
    switch (spec.kind) {
        case StateKind::GaussianPosition:
        case StateKind::PlaneWavePacket:
            allowed.insert({"center", "width", "carrier"});
            spec.center = require_number(obj, "center", where, errors, false, 0.0);
            spec.width = require_number(obj, "width", where, errors);
            spec.carrier = require_number(obj, "carrier", where, errors,
                                          spec.kind == StateKind::PlaneWavePacket, 0.0);
            break;
        case StateKind::GaussianMomentum:
        case StateKind::TopHatMomentum:
            allowed.insert({"center", "width"});
            spec.center = require_number(obj, "center", where, errors, false, 0.0);
            spec.width = require_number(obj, "width", where, errors);
            break;
        case StateKind::TwoLobeSine:
            allowed.insert({"amp_a", "amp_b", "kick_scale"});
            spec.amp_a = require_number(obj, "amp_a", where, errors, false, 0.0);
            spec.amp_b = require_number(obj, "amp_b", where, errors, false, 0.0);
            spec.kick_scale = require_number(obj, "kick_scale", where, errors);
            break;
    }
    reject_unknown(obj, allowed, where, errors);

    try {
        validate_state_spec(spec);
    } catch (const std::exception& e) {
        errors.add(where + ": " + e.what());
    }
    return spec;
}

SlitModel parse_slit(const json& obj, Collector& errors) {
    SlitModel slit;
    if (!obj.is_object()) {
        errors.add("slit: must be an object");
        return slit;
    }
    const std::string mode =
        obj.contains("mode") && obj["mode"].is_string() ? obj["mode"].get<std::string>() : "";
    if (mode == "partition") {
        slit.mode = SlitMode::Partition;
        slit.x_divide = require_number(obj, "x_divide", "slit", errors, false, 0.0);
        reject_unknown(obj, {"mode", "x_divide"}, "slit", errors);
    } else if (mode == "aperture") {
        slit.mode = SlitMode::Aperture;
        slit.separation = require_number(obj, "separation", "slit", errors);
        slit.width = require_number(obj, "width", "slit", errors);
        reject_unknown(obj, {"mode", "separation", "width"}, "slit", errors);
        if (!(slit.separation > 0.0)) errors.add("slit: separation must be positive");
        if (!(slit.width > 0.0)) errors.add("slit: width must be positive");
        if (slit.width > slit.separation)
            errors.add("slit: aperture windows overlap (width > separation)");
    } else {
        errors.add("slit: mode must be 'partition' or 'aperture'");
    }
    return slit;
}

SweepDescriptor parse_sweep(const json& obj, Collector& errors) {
    SweepDescriptor d;
    if (!obj.is_object()) {
        errors.add("sweep: must be an object");
        return d;
    }
    reject_unknown(obj, {"parameter", "from", "to", "points", "scale"}, "sweep", errors);
    if (obj.contains("parameter") && obj["parameter"].is_string())
        d.parameter = obj["parameter"].get<std::string>();
    else
        errors.add("sweep: missing string field 'parameter'");
    if (d.parameter != "wall.width" && d.parameter != "kick" && !d.parameter.empty())
        errors.add("sweep: parameter must be 'wall.width' or 'kick'");
    d.from = require_number(obj, "from", "sweep", errors);
    d.to = require_number(obj, "to", "sweep", errors);
    if (obj.contains("points")) {
        if (obj["points"].is_number_integer())
            d.points = obj["points"].get<int>();
        else
            errors.add("sweep: field 'points' must be an integer");
    } else {
        errors.add("sweep: missing field 'points'");
    }
    if (d.points < 3) errors.add("sweep: at least 3 points required");
    if (obj.contains("scale")) {
        const std::string scale = obj["scale"].is_string() ? obj["scale"].get<std::string>() : "";
        if (scale == "log")
            d.log_scale = true;
        else if (scale == "linear")
            d.log_scale = false;
        else
            errors.add("sweep: scale must be 'linear' or 'log'");
    }
    if (d.log_scale && !(d.from > 0.0 && d.to > 0.0))
        errors.add("sweep: log scale requires positive endpoints");
    return d;
}

} // namespace

ScenarioConfig parse_config(const json& doc) {
    Collector errors;
    ScenarioConfig config;

    if (!doc.is_object()) {
        errors.add("top level: config must be a JSON object");
        errors.raise();
    }

    reject_unknown(doc,
                   {"grid", "particle", "wall", "mass_particle", "mass_wall", "tau", "tau_prime",
                    "kick", "slit", "pivot_p0", "seed", "mc_samples", "v_min", "acc_min",
                    "conditional_slices", "sweep"},
                   "top level", errors);

    if (doc.contains("grid") && doc["grid"].is_object()) {
        const json& g = doc["grid"];
        reject_unknown(g, {"length", "n_points"}, "grid", errors);
        const double length = require_number(g, "length", "grid", errors);
        long long n = 0;
        if (g.contains("n_points") && g["n_points"].is_number_integer())
            n = g["n_points"].get<long long>();
        else
            errors.add("grid: missing integer field 'n_points'");
        if (errors.empty()) {
            try {
                config.grid = GridSpec(length, static_cast<std::size_t>(n));
            } catch (const std::exception& e) {
                errors.add(std::string("grid: ") + e.what());
            }
        }
    } else {
        errors.add("top level: missing object field 'grid'");
    }

    if (doc.contains("particle"))
        config.particle = parse_state(doc["particle"], "particle", errors);
    else
        errors.add("top level: missing object field 'particle'");
    if (doc.contains("wall"))
        config.wall = parse_state(doc["wall"], "wall", errors);
    else
        errors.add("top level: missing object field 'wall'");

    config.mass_particle = require_number(doc, "mass_particle", "top level", errors, false, 1.0);
    config.mass_wall = require_number(doc, "mass_wall", "top level", errors, false, 1.0);
    if (!(config.mass_particle > 0.0)) errors.add("mass_particle must be positive");
    if (!(config.mass_wall > 0.0)) errors.add("mass_wall must be positive");

    config.tau = require_number(doc, "tau", "top level", errors, false, 0.0);
    config.tau_prime = require_number(doc, "tau_prime", "top level", errors, false, 0.0);
    if (config.tau < 0.0) errors.add("tau must be nonnegative");
    if (config.tau_prime < 0.0) errors.add("tau_prime must be nonnegative");

    config.kick = require_number(doc, "kick", "top level", errors);
    if (config.kick < 0.0) errors.add("kick must be nonnegative");

    if (doc.contains("slit"))
        config.slit = parse_slit(doc["slit"], errors);
    else
        errors.add("top level: missing object field 'slit'");

    if (doc.contains("pivot_p0"))
        config.pivot_p0 = require_number(doc, "pivot_p0", "top level", errors);

    if (doc.contains("seed")) {
        if (doc["seed"].is_number_unsigned() || doc["seed"].is_number_integer()) {
            config.seed = doc["seed"].get<std::uint64_t>();
            config.seed_set = true;
        } else {
            errors.add("seed must be an integer");
        }
    }

    if (doc.contains("mc_samples")) {
        if (doc["mc_samples"].is_number_integer())
            config.mc_samples = doc["mc_samples"].get<int>();
        else
            errors.add("mc_samples must be an integer");
        if (config.mc_samples < 1) errors.add("mc_samples must be positive");
    }

    config.v_min = require_number(doc, "v_min", "top level", errors, false, config.v_min);
    config.acc_min = require_number(doc, "acc_min", "top level", errors, false, config.acc_min);
    if (!(config.v_min >= 0.0 && config.v_min < 1.0)) errors.add("v_min must lie in [0, 1)");
    if (!(config.acc_min >= 0.0 && config.acc_min < 1.0)) errors.add("acc_min must lie in [0, 1)");

    if (doc.contains("conditional_slices")) {
        if (doc["conditional_slices"].is_array()) {
            config.conditional_slices.clear();
            for (const auto& v : doc["conditional_slices"]) {
                if (v.is_number())
                    config.conditional_slices.push_back(v.get<double>());
                else
                    errors.add("conditional_slices entries must be numbers");
            }
            for (double q : config.conditional_slices)
                if (std::abs(q) > 0.5 * config.grid.length())
                    errors.add("conditional_slices: slice outside the grid");
        } else {
            errors.add("conditional_slices must be an array");
        }
    }

    if (doc.contains("sweep")) config.sweep = parse_sweep(doc["sweep"], errors);

    // Monte Carlo estimates may only run seeded.
    if (config.sweep && !config.seed_set)
        errors.add("sweep requested but no seed given; Monte Carlo accuracy requires one");

    errors.raise_if_any();
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file '" + path.string() + "'"});
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("JSON parse error: ") + e.what()});
    }
    return parse_config(doc);
}

std::string canonical_config(const ScenarioConfig& c) {
    json doc;
    doc["grid"] = {{"length", c.grid.length()}, {"n_points", c.grid.n_points()}};
    const auto state_json = [](const StateSpec& s) {
        return json{{"kind", to_string(s.kind)}, {"center", s.center},     {"width", s.width},
                    {"carrier", s.carrier},      {"amp_a", s.amp_a},       {"amp_b", s.amp_b},
                    {"kick_scale", s.kick_scale}};
    };
    doc["particle"] = state_json(c.particle);
    doc["wall"] = state_json(c.wall);
    doc["mass_particle"] = c.mass_particle;
    doc["mass_wall"] = c.mass_wall;
    doc["tau"] = c.tau;
    doc["tau_prime"] = c.tau_prime;
    doc["kick"] = c.kick;
    doc["slit"] = {{"mode", to_string(c.slit.mode)},
                   {"x_divide", c.slit.x_divide},
                   {"separation", c.slit.separation},
                   {"width", c.slit.width}};
    if (c.pivot_p0) doc["pivot_p0"] = *c.pivot_p0;
    if (c.seed_set) doc["seed"] = c.seed;
    doc["mc_samples"] = c.mc_samples;
    doc["v_min"] = c.v_min;
    doc["acc_min"] = c.acc_min;
    doc["conditional_slices"] = c.conditional_slices;
    if (c.sweep)
        doc["sweep"] = {{"parameter", c.sweep->parameter},
                        {"from", c.sweep->from},
                        {"to", c.sweep->to},
                        {"points", c.sweep->points},
                        {"scale", c.sweep->log_scale ? "log" : "linear"}};
    return doc.dump();
}

std::string config_hash(const ScenarioConfig& config) {
    const std::string bytes = canonical_config(config);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

} // namespace qslit
