#pragma once

// Grid-free quadrature routes used to cross-check the lattice results.

#include <complex>
#include <functional>

namespace qslit::oracle {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

/// Fringe-contrast overlap of a Gaussian wall state of std-dev sigma
/// centered at `center`, integrated adaptively:
///   integral of |xi(Q)|^2 e^{-2 i k Q / hbar} dQ  (hbar = 1).
std::complex<double> gaussian_visibility_quadrature(double sigma, double center, double k);

/// Closed form of the same integral: magnitude e^{-2 k^2 sigma^2 / hbar^2}.
double gaussian_visibility_exact(double sigma, double k);

} // namespace qslit::oracle
