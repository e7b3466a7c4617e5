#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qslit/grid.hpp"
#include "qslit/states.hpp"

namespace qslit {

enum class SlitMode {
    /// Half-plane split at x_divide: an exact resolution of identity
    /// (S1 + S2 = 1, S1 S2 = 0). Faithful to the projector algebra.
    Partition,
    /// Two disjoint top-hat windows of width w centered at +/- d/2, with
    /// joint renormalization (post-selection on the particle passing).
    Aperture,
};

const char* to_string(SlitMode mode);

struct SlitModel {
    SlitMode mode = SlitMode::Partition;
    double x_divide = 0.0;    ///< Partition: split coordinate
    double separation = 0.0;  ///< Aperture: center-to-center distance d
    double width = 0.0;       ///< Aperture: window width w (requires w <= d)
};

struct SweepDescriptor {
    std::string parameter;  ///< "wall.width" or "kick"
    double from = 0.0;
    double to = 0.0;
    int points = 0;
    bool log_scale = false;
};

/// Full description of one experiment run. Loaded from JSON by the config
/// module; every stochastic step draws from `seed` only.
struct ScenarioConfig {
    GridSpec grid{40.0, 1024};
    StateSpec particle;
    StateSpec wall;
    double mass_particle = 1.0;
    double mass_wall = 1.0;
    double tau = 0.0;        ///< source-to-wall flight time
    double tau_prime = 0.0;  ///< wall-to-screen flight time
    double kick = 0.0;       ///< momentum exchanged at the slits (+k wall at slit 1)
    SlitModel slit;
    std::optional<double> pivot_p0;  ///< path-inference pivot; defaults to the wall momentum mean
    std::uint64_t seed = 0;
    bool seed_set = false;
    int mc_samples = 10000;
    double v_min = 0.9;
    double acc_min = 0.99;
    std::vector<double> conditional_slices{0.0};
    std::optional<SweepDescriptor> sweep;
};

} // namespace qslit
