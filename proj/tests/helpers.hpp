#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qslit/entanglement.hpp"
#include "qslit/grid.hpp"
#include "qslit/rng.hpp"
#include "qslit/states.hpp"

namespace qslit::testing {

// Grids with length = m * 2 pi have momentum spacing 1/m, so unit kicks
// land exactly on the momentum lattice.
inline GridSpec unit_kick_grid(int m, std::size_t n) {
    return GridSpec(2.0 * std::numbers::pi * m, n);
}

inline WaveFunction gaussian_position(const GridSpec& grid, double center, double sigma,
                                      double carrier = 0.0) {
    StateSpec spec;
    spec.kind = StateKind::GaussianPosition;
    spec.center = center;
    spec.width = sigma;
    spec.carrier = carrier;
    return build_state(spec, grid);
}

/// Gaussian with a quadratic phase e^{i beta x^2 / 2}; built raw so tests
/// control the exact amplitudes.
inline WaveFunction chirped_gaussian(const GridSpec& grid, double sigma, double beta) {
    std::vector<cplx> amps(grid.n_points());
    for (std::size_t j = 0; j < amps.size(); ++j) {
        const double x = grid.position(j);
        const double envelope = std::exp(-x * x / (4.0 * sigma * sigma));
        amps[j] = envelope * std::polar(1.0, 0.5 * beta * x * x);
    }
    return WaveFunction::normalized(grid, Representation::Position, std::move(amps));
}

/// Smooth random state: a handful of seeded Gaussians with random centers,
/// widths, carriers and complex weights, kept well inside the grid.
inline WaveFunction random_smooth_state(const GridSpec& grid, Rng& rng, int terms = 4) {
    std::vector<cplx> amps(grid.n_points());
    const double span = 0.15 * grid.length();
    const double pspan = 0.1 * grid.max_momentum();
    for (int t = 0; t < terms; ++t) {
        const double center = span * (2.0 * rng.uniform() - 1.0);
        const double sigma = 0.5 + rng.uniform();
        const double carrier = pspan * (2.0 * rng.uniform() - 1.0);
        const cplx weight = std::polar(0.3 + rng.uniform(), 2.0 * std::numbers::pi * rng.uniform());
        for (std::size_t j = 0; j < amps.size(); ++j) {
            const double x = grid.position(j);
            const double d = x - center;
            amps[j] += weight * std::exp(-d * d / (4.0 * sigma * sigma)) *
                       std::polar(1.0, carrier * d);
        }
    }
    return WaveFunction::normalized(grid, Representation::Position, std::move(amps));
}

inline double max_pointwise_diff(const WaveFunction& a, const WaveFunction& b) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        worst = std::max(worst, std::abs(a.amplitudes()[j] - b.amplitudes()[j]));
    return worst;
}

inline Cvec random_unit_vector(std::size_t dim, Rng& rng) {
    Cvec v(dim);
    for (auto& x : v)
        x = cplx(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
    return linalg::normalized(std::move(v));
}

/// Random orthonormal basis by Gram-Schmidt on random vectors.
inline std::vector<Cvec> random_basis(std::size_t dim, Rng& rng) {
    std::vector<Cvec> basis;
    while (basis.size() < dim) {
        Cvec v = random_unit_vector(dim, rng);
        for (const Cvec& u : basis) {
            const cplx proj = linalg::dot(u, v);
            for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * u[i];
        }
        if (linalg::norm(v) > 1e-3) basis.push_back(linalg::normalized(std::move(v)));
    }
    return basis;
}

inline std::vector<Cvec> computational_basis(std::size_t dim) {
    std::vector<Cvec> basis(dim, Cvec(dim, cplx{}));
    for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1.0;
    return basis;
}

inline Cmat random_hermitian(std::size_t dim, Rng& rng) {
    Cmat m(dim, Cvec(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = cplx(2.0 * rng.uniform() - 1.0, 0.0);
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx v(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
            m[i][j] = v;
            m[j][i] = std::conj(v);
        }
    }
    return m;
}

} // namespace qslit::testing
