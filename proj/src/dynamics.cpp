#include "qslit/dynamics.hpp"

#include <cmath>
#include <vector>

#include "qslit/errors.hpp"
#include "qslit/kernels.hpp"

namespace qslit {

const char* to_string(SlitMode mode) {
    return mode == SlitMode::Partition ? "partition" : "aperture";
}

WaveFunction free_propagate(const WaveFunction& psi, double mass, double t, EdgeCheck check) {
    if (!(mass > 0.0)) throw ContractViolation("free_propagate: mass must be positive");
    if (!(t >= 0.0)) throw ContractViolation("free_propagate: time must be nonnegative");

    const bool position_input = psi.representation() == Representation::Position;
    WaveFunction tilde = in_representation(psi, Representation::Momentum);

    std::vector<cplx> amps(tilde.amplitudes().begin(), tilde.amplitudes().end());
    const GridSpec& grid = tilde.grid();
    const double factor = t / (2.0 * mass * kHbar);
    kernels::transform_inplace(amps.data(), amps.size(), [&](std::size_t m, cplx a) {
        const double p = grid.momentum(m);
        const double phase = -p * p * factor;
        return a * cplx(std::cos(phase), std::sin(phase));
    });

    WaveFunction out = WaveFunction::raw(grid, Representation::Momentum, std::move(amps));
    if (position_input) {
        out = to_position(out);
        if (check == EdgeCheck::Strict) require_edge_decay(out, "free propagation");
    }
    return out;
}

std::pair<WaveFunction, WaveFunction> apply_slits(const WaveFunction& psi, const SlitModel& slit) {
    if (psi.representation() != Representation::Position)
        throw ContractViolation("apply_slits: input must be in position representation");

    const GridSpec& grid = psi.grid();
    std::vector<cplx> a1(grid.n_points()), a2(grid.n_points());

    if (slit.mode == SlitMode::Partition) {
        for (std::size_t j = 0; j < grid.n_points(); ++j) {
            const bool upper = grid.position(j) >= slit.x_divide;
            a1[j] = upper ? psi.amplitudes()[j] : cplx{};
            a2[j] = upper ? cplx{} : psi.amplitudes()[j];
        }
        return {WaveFunction::raw(grid, Representation::Position, std::move(a1)),
                WaveFunction::raw(grid, Representation::Position, std::move(a2))};
    }

    if (slit.width > slit.separation)
        throw ContractViolation("apply_slits: aperture windows overlap (w > d)");
    const double c1 = 0.5 * slit.separation;
    const double half_w = 0.5 * slit.width;
    for (std::size_t j = 0; j < grid.n_points(); ++j) {
        const double x = grid.position(j);
        a1[j] = std::abs(x - c1) <= half_w ? psi.amplitudes()[j] : cplx{};
        a2[j] = std::abs(x + c1) <= half_w ? psi.amplitudes()[j] : cplx{};
    }
    WaveFunction w1 = WaveFunction::raw(grid, Representation::Position, std::move(a1));
    WaveFunction w2 = WaveFunction::raw(grid, Representation::Position, std::move(a2));
    const double joint = w1.norm_squared() + w2.norm_squared();
    if (!(joint > 0.0))
        throw NumericalError("apply_slits: no amplitude passes the aperture windows");
    const double inv = 1.0 / std::sqrt(joint);
    std::vector<cplx> b1(w1.amplitudes().begin(), w1.amplitudes().end());
    std::vector<cplx> b2(w2.amplitudes().begin(), w2.amplitudes().end());
    for (auto& v : b1) v *= inv;
    for (auto& v : b2) v *= inv;
    return {WaveFunction::raw(grid, Representation::Position, std::move(b1)),
            WaveFunction::raw(grid, Representation::Position, std::move(b2))};
}

double snap_momentum(const GridSpec& grid, double k) {
    const double dp = grid.momentum_spacing();
    return static_cast<double>(std::llround(k / dp)) * dp;
}

WaveFunction momentum_kick(const WaveFunction& psi, double k, int sign) {
    if (!(k >= 0.0)) throw ContractViolation("momentum_kick: k must be nonnegative");
    if (sign != 1 && sign != -1) throw ContractViolation("momentum_kick: sign must be +1 or -1");

    const GridSpec& grid = psi.grid();
    const double dp = grid.momentum_spacing();
    const long long bins = std::llround(k / dp) * sign;

    if (psi.representation() == Representation::Momentum) {
        std::vector<cplx> out(psi.size());
        kernels::rotate_copy(psi.amplitudes().data(), out.data(), psi.size(), bins);
        return WaveFunction::raw(grid, Representation::Momentum, std::move(out));
    }

    const double applied = static_cast<double>(bins) * dp;
    std::vector<cplx> amps(psi.amplitudes().begin(), psi.amplitudes().end());
    kernels::transform_inplace(amps.data(), amps.size(), [&](std::size_t j, cplx a) {
        const double phase = applied * grid.position(j) / kHbar;
        return a * cplx(std::cos(phase), std::sin(phase));
    });
    return WaveFunction::raw(grid, Representation::Position, std::move(amps));
}

BranchPair run_pipeline(const ScenarioConfig& config) {
    const WaveFunction psi0 = build_state(config.particle, config.grid);
    const WaveFunction xi0 = build_state(config.wall, config.grid);

    const double k = snap_momentum(config.grid, config.kick);

    // Flight to the wall: the state is still smooth, keep the strict check.
    const WaveFunction at_wall =
        free_propagate(in_representation(psi0, Representation::Position), config.mass_particle,
                       config.tau, EdgeCheck::Strict);

    auto [s1, s2] = apply_slits(at_wall, config.slit);

    // Momentum exchange: slit 1 kicks the wall by +k and the particle by -k;
    // slit 2 the other way around. Projection windows and kick phases are
    // both diagonal in position, so the order does not matter.
    const WaveFunction p1 = momentum_kick(s1, k, -1);
    const WaveFunction p2 = momentum_kick(s2, k, +1);

    // Post-slit factors carry hard edges; see free_propagate on why the
    // boundary check is off here.
    WaveFunction psi1 = free_propagate(p1, config.mass_particle, config.tau_prime, EdgeCheck::Off);
    WaveFunction psi2 = free_propagate(p2, config.mass_particle, config.tau_prime, EdgeCheck::Off);

    WaveFunction wall1 = momentum_kick(in_representation(xi0, Representation::Momentum), k, +1);
    WaveFunction wall2 = momentum_kick(in_representation(xi0, Representation::Momentum), k, -1);

    return BranchPair{Branch{std::move(psi1), std::move(wall1)},
                      Branch{std::move(psi2), std::move(wall2)}, k};
}

} // namespace qslit
