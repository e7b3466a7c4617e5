#include "composite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qslit/states.hpp"

namespace qslit::oracle {

namespace {

using cvec = std::vector<std::complex<double>>;

// Dense kernel matrix of the centered continuum transform; row m holds
// scale * e^{-+ i p_m x_j / hbar} over j.
struct TransformMatrix {
    std::size_t n;
    cvec kernel; // kernel[m * n + j]

    TransformMatrix(const GridSpec& grid, bool forward) : n(grid.n_points()), kernel(n * n) {
        const double sign = forward ? -1.0 : 1.0;
        const double scale = (forward ? grid.spacing() : grid.momentum_spacing()) /
                             std::sqrt(2.0 * std::numbers::pi);
        for (std::size_t m = 0; m < n; ++m) {
            const double out_coord = forward ? grid.momentum(m) : grid.position(m);
            for (std::size_t j = 0; j < n; ++j) {
                const double in_coord = forward ? grid.position(j) : grid.momentum(j);
                kernel[m * n + j] = scale * std::polar(1.0, sign * out_coord * in_coord);
            }
        }
    }

    cvec apply(const cvec& in) const {
        cvec out(n);
        for (std::size_t m = 0; m < n; ++m) {
            std::complex<double> acc{};
            const std::complex<double>* row = kernel.data() + m * n;
            for (std::size_t j = 0; j < n; ++j) acc += row[j] * in[j];
            out[m] = acc;
        }
        return out;
    }
};

cvec position_amplitudes(const WaveFunction& psi, const TransformMatrix& backward) {
    cvec amps(psi.amplitudes().begin(), psi.amplitudes().end());
    if (psi.representation() == Representation::Momentum) amps = backward.apply(amps);
    return amps;
}

cvec propagate(const cvec& amps, const GridSpec& grid, const TransformMatrix& fwd,
               const TransformMatrix& bwd, double mass, double t) {
    cvec tilde = fwd.apply(amps);
    for (std::size_t m = 0; m < tilde.size(); ++m) {
        const double p = grid.momentum(m);
        tilde[m] *= std::polar(1.0, -p * p * t / (2.0 * mass));
    }
    return bwd.apply(tilde);
}

} // namespace

CompositeState run_composite_pipeline(const ScenarioConfig& config) {
    const GridSpec& grid = config.grid;
    const std::size_t n = grid.n_points();
    const TransformMatrix fwd(grid, true);
    const TransformMatrix bwd(grid, false);

    cvec psi = position_amplitudes(build_state(config.particle, grid), bwd);
    const cvec xi = position_amplitudes(build_state(config.wall, grid), bwd);

    psi = propagate(psi, grid, fwd, bwd, config.mass_particle, config.tau);

    const double dp = grid.momentum_spacing();
    const double k = std::llround(config.kick / dp) * dp;

    // Slit membership and the matching momentum phases, row by row.
    CompositeState state;
    state.grid = grid;
    state.amp.assign(n * n, {});
    for (std::size_t iq = 0; iq < n; ++iq) {
        const double q = grid.position(iq);
        int slit = 0;
        if (config.slit.mode == SlitMode::Partition) {
            slit = q >= config.slit.x_divide ? 1 : 2;
        } else {
            const double c = 0.5 * config.slit.separation;
            const double hw = 0.5 * config.slit.width;
            if (std::abs(q - c) <= hw)
                slit = 1;
            else if (std::abs(q + c) <= hw)
                slit = 2;
        }
        if (slit == 0) continue;
        const double sign = slit == 1 ? 1.0 : -1.0;
        const std::complex<double> particle_phase = std::polar(1.0, -sign * k * q);
        for (std::size_t iQ = 0; iQ < n; ++iQ) {
            const double Q = grid.position(iQ);
            state.amp[iq * n + iQ] =
                psi[iq] * particle_phase * xi[iQ] * std::polar(1.0, sign * k * Q);
        }
    }

    if (config.slit.mode == SlitMode::Aperture) {
        double n2 = 0.0;
        for (const auto& a : state.amp) n2 += std::norm(a);
        n2 *= grid.spacing() * grid.spacing();
        if (!(n2 > 0.0)) throw std::runtime_error("composite oracle: nothing passes the slits");
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& a : state.amp) a *= inv;
    }

    // Flight to the screen: propagate the particle axis for every wall column.
    for (std::size_t iQ = 0; iQ < n; ++iQ) {
        cvec column(n);
        for (std::size_t iq = 0; iq < n; ++iq) column[iq] = state.amp[iq * n + iQ];
        column = propagate(column, grid, fwd, bwd, config.mass_particle, config.tau_prime);
        for (std::size_t iq = 0; iq < n; ++iq) state.amp[iq * n + iQ] = column[iq];
    }
    return state;
}

std::vector<double> composite_marginal_q(const CompositeState& state) {
    const std::size_t n = state.grid.n_points();
    std::vector<double> density(n, 0.0);
    for (std::size_t iq = 0; iq < n; ++iq) {
        double acc = 0.0;
        for (std::size_t iQ = 0; iQ < n; ++iQ) acc += std::norm(state.amp[iq * n + iQ]);
        density[iq] = acc * state.grid.spacing();
    }
    double mass = 0.0;
    for (double v : density) mass += v;
    mass *= state.grid.spacing();
    for (double& v : density) v /= mass;
    return density;
}

std::vector<double> composite_conditional_P(const CompositeState& state, double q) {
    const GridSpec& grid = state.grid;
    const std::size_t n = grid.n_points();
    const std::size_t iq = grid.nearest_index(q);

    cvec row(n);
    for (std::size_t iQ = 0; iQ < n; ++iQ) row[iQ] = state.amp[iq * n + iQ];
    const TransformMatrix fwd(grid, true);
    const cvec tilde = fwd.apply(row);

    std::vector<double> density(n);
    double mass = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        density[m] = std::norm(tilde[m]);
        mass += density[m];
    }
    mass *= grid.momentum_spacing();
    if (!(mass > 0.0)) throw std::runtime_error("composite oracle: conditional row has no mass");
    for (double& v : density) v /= mass;
    return density;
}

} // namespace qslit::oracle
