#include "stats.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qslit::oracle {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

} // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p outside (0,1)");
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (normal_cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double spreading_sigma(double sigma0, double mass, double t) {
    const double drift = t / (2.0 * mass * sigma0);
    return std::sqrt(sigma0 * sigma0 + drift * drift);
}

double chirped_gaussian_product(double sigma, double beta) {
    const double s2 = sigma * sigma;
    return 0.5 * std::sqrt(1.0 + 4.0 * beta * beta * s2 * s2);
}

double two_gaussian_fringe_spacing(double w, double d, double t, double mass) {
    const double g = t / (2.0 * mass * w * w);
    if (!(g > 0.0)) throw std::invalid_argument("two_gaussian_fringe_spacing: needs t > 0");
    return 4.0 * std::numbers::pi * w * w * (1.0 + g * g) / (g * d);
}

} // namespace qslit::oracle
