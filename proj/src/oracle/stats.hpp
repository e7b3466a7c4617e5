#pragma once

// Closed-form reference values used by tests.

namespace qslit::oracle {

/// Inverse standard-normal CDF by bisection on erfc; accurate to ~1e-13.
double normal_quantile(double p);

/// Std-dev of a freely spreading Gaussian: sqrt(sigma0^2 + (t/(2 m sigma0))^2),
/// hbar = 1.
double spreading_sigma(double sigma0, double mass, double t);

/// Position-momentum product of a Gaussian carrying the quadratic phase
/// e^{i beta x^2 / (2 hbar)}: (1/2) sqrt(1 + 4 beta^2 sigma^4), hbar = 1.
double chirped_gaussian_product(double sigma, double beta);

/// Fringe period of two interfering Gaussians of width w a distance d
/// apart after flight time t (mass m, hbar = 1):
/// 4 pi w^2 (1 + g^2) / (g d) with g = t / (2 m w^2).
double two_gaussian_fringe_spacing(double w, double d, double t, double mass);

} // namespace qslit::oracle
