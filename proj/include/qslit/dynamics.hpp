#pragma once

#include <utility>

#include "qslit/grid.hpp"
#include "qslit/scenario.hpp"

namespace qslit {

/// One term of the entangled particle (x) wall superposition after the
/// slits. Particle factors are sub-normalized so that the pair's joint
/// norm squared sums to one; wall factors stay unit-normalized.
struct Branch {
    WaveFunction particle;
    WaveFunction wall;
};

struct BranchPair {
    Branch slit1;
    Branch slit2;
    double applied_kick = 0.0;  ///< kick after snapping to the momentum lattice
};

enum class EdgeCheck { Strict, Off };

/// Free evolution exp(-i p^2 t / (2 m hbar)): a pure phase in momentum
/// space, so the momentum distribution is untouched. With Strict checking
/// a state that spreads into the grid boundary raises "grid too small";
/// the pipeline disables the check after slit projection, whose sharp
/// edges put slowly decaying diffraction tails on any finite grid.
WaveFunction free_propagate(const WaveFunction& psi, double mass, double t,
                            EdgeCheck check = EdgeCheck::Strict);

/// Splits psi into the two slit branches. Partition mode returns the exact
/// decomposition psi = psi1 + psi2 by the indicator of x >= x_divide;
/// Aperture mode windows psi with the two disjoint openings and jointly
/// renormalizes the pair.
std::pair<WaveFunction, WaveFunction> apply_slits(const WaveFunction& psi, const SlitModel& slit);

/// Nearest lattice momentum: round(k / dP) * dP.
double snap_momentum(const GridSpec& grid, double k);

/// Multiplies position amplitudes by e^{i sign k x / hbar} (equivalently,
/// shifts the momentum distribution by sign*k). k is snapped to the
/// momentum lattice first, making the momentum-space action an exact
/// circular index shift.
WaveFunction momentum_kick(const WaveFunction& psi, double k, int sign);

/// The full evolution: propagate to the wall, project onto the slits,
/// exchange momentum (particle receives the opposite kick of the wall,
/// branch by branch), propagate to the screen.
BranchPair run_pipeline(const ScenarioConfig& config);

} // namespace qslit
