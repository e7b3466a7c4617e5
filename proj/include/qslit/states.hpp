#pragma once

#include <string>

#include "qslit/grid.hpp"

namespace qslit {

enum class StateKind {
    GaussianPosition,  ///< Gaussian envelope in position, optional carrier momentum
    GaussianMomentum,  ///< Gaussian profile in momentum
    TopHatMomentum,    ///< constant amplitude on a compact momentum interval
    TwoLobeSine,       ///< piecewise sine on [-2k, 2k]: harmonics of different
                       ///< order per lobe, so the +/-k shifted copies overlap on
                       ///< an interval of measure 2k yet their overlap integral
                       ///< cancels exactly
    PlaneWavePacket,   ///< alias of GaussianPosition with a mandatory carrier
};

const char* to_string(StateKind kind);
StateKind state_kind_from_string(const std::string& name);

struct StateSpec {
    StateKind kind = StateKind::GaussianPosition;
    double center = 0.0;      ///< center in the representation natural to the kind
    double width = 0.0;       ///< std-dev for Gaussians, full width for the top hat
    double carrier = 0.0;     ///< carrier momentum p0 (position-built kinds only)
    double amp_a = 0.0;       ///< two-lobe sine: weight of the [0, 2k] lobe
    double amp_b = 0.0;       ///< two-lobe sine: weight of the [-2k, 0] lobe
    double kick_scale = 0.0;  ///< two-lobe sine: the momentum scale k
};

/// Validates the spec against its kind; throws ContractViolation on bad
/// parameters. Used by both build_state and the config loader.
void validate_state_spec(const StateSpec& spec);

/// Builds the normalized state in the representation natural to its kind
/// (position for Gaussian/plane-wave kinds, momentum for the rest).
/// Throws NumericalError("grid too coarse ...") when the grid does not put
/// at least 16 samples across the narrowest feature, and
/// NumericalError("grid too small ...") when the state cannot decay below
/// the edge threshold.
WaveFunction build_state(const StateSpec& spec, const GridSpec& grid);

/// Width of the smallest momentum interval holding all but epsilon of the
/// probability mass. epsilon must lie in (0, 0.1].
double momentum_support_width(const WaveFunction& psi, double epsilon);

} // namespace qslit
