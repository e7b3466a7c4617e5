#pragma once

// Brute-force route through the full particle (x) wall Hilbert space.
// The whole final state is evolved as a dense 2-D array with its own
// direct O(n^2) transforms; nothing here touches the factored BranchPair
// path it is used to check.

#include <complex>
#include <vector>

#include "qslit/scenario.hpp"

namespace qslit::oracle {

struct CompositeState {
    GridSpec grid{40.0, 1024};
    // amp[iq * n + iQ]: particle coordinate iq, wall coordinate iQ
    std::vector<std::complex<double>> amp;
};

/// Runs the full scenario in the composite space: propagate the particle
/// axis, window by the slits, apply the opposite momentum phases to the
/// two slit regions, propagate to the screen.
CompositeState run_composite_pipeline(const ScenarioConfig& config);

/// Screen density: the wall coordinate is summed out, result normalized.
std::vector<double> composite_marginal_q(const CompositeState& state);

/// Wall-momentum density at the particle grid point nearest q: the q-row
/// is transformed over the wall axis and squared, result normalized.
std::vector<double> composite_conditional_P(const CompositeState& state, double q);

} // namespace qslit::oracle
