#include "qslit/recoil.hpp"

#include <numbers>

#include "qslit/errors.hpp"

namespace qslit::recoil {

namespace {

void validate(const RecoilScenario& s) {
    if (!(s.wavelength > 0.0)) throw ContractViolation("recoil: wavelength must be positive");
    if (!(s.target_mass > 0.0)) throw ContractViolation("recoil: target mass must be positive");
}

} // namespace

double momentum_transfer(const RecoilScenario& s) {
    validate(s);
    return 2.0 * si::kPlanck / s.wavelength;
}

double recoil_velocity(const RecoilScenario& s) { return momentum_transfer(s) / s.target_mass; }

double max_target_spread(const RecoilScenario& s) {
    validate(s);
    return std::numbers::pi * si::kHbar / momentum_transfer(s);
}

std::vector<RecoilRow> reference_table() {
    constexpr double lambda = 0.5e-6;
    const RecoilScenario mercury{lambda, si::kMercuryAtomicWeight * si::kAtomicMassUnit};
    const RecoilScenario sodium_bec{lambda, 1e4 * si::kSodiumAtomicWeight * si::kAtomicMassUnit};
    return {
        {"mercury_atom", lambda, mercury.target_mass, recoil_velocity(mercury),
         max_target_spread(mercury)},
        {"sodium_bec_1e4", lambda, sodium_bec.target_mass, recoil_velocity(sodium_bec),
         max_target_spread(sodium_bec)},
    };
}

} // namespace qslit::recoil
