#pragma once

#include <string>
#include <vector>

namespace qslit::recoil {

// CODATA 2018 values; h is exact in the 2019 SI.
namespace si {
inline constexpr double kPlanck = 6.62607015e-34;          // J s
inline constexpr double kHbar = 1.054571817e-34;           // J s
inline constexpr double kAtomicMassUnit = 1.66053906660e-27; // kg
inline constexpr double kMercuryAtomicWeight = 200.592;    // u, standard atomic weight
inline constexpr double kSodiumAtomicWeight = 22.98976928; // u
} // namespace si

/// Photon of wavelength `wavelength` reflected back by a target of mass
/// `target_mass`; the impact transferred is twice the photon momentum.
struct RecoilScenario {
    double wavelength = 0.0;   // m
    double target_mass = 0.0;  // kg
};

/// Momentum transferred to the target: k = 2h/lambda.
double momentum_transfer(const RecoilScenario& s);

/// Recoil velocity v = k/M = 2h/(M lambda).
double recoil_velocity(const RecoilScenario& s);

/// Largest wave-function spread of the target that still allows a clear
/// fringe pattern: pi hbar / k, which equals lambda/4 for k = 2h/lambda.
double max_target_spread(const RecoilScenario& s);

struct RecoilRow {
    std::string target;
    double wavelength = 0.0;
    double mass = 0.0;
    double velocity = 0.0;
    double max_spread = 0.0;
};

/// Reference table: a single mercury atom and a 10^4-atom sodium
/// condensate, both hit by 0.5 um light.
std::vector<RecoilRow> reference_table();

} // namespace qslit::recoil
