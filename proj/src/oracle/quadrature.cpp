#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qslit::oracle {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth) {
    if (depth > 60) throw std::runtime_error("adaptive_simpson: recursion limit");
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 0);
}

std::complex<double> gaussian_visibility_quadrature(double sigma, double center, double k) {
    const auto density = [&](double q) {
        const double d = q - center;
        return std::exp(-d * d / (2.0 * sigma * sigma)) /
               (sigma * std::sqrt(2.0 * std::numbers::pi));
    };
    const double lo = center - 14.0 * sigma;
    const double hi = center + 14.0 * sigma;
    const double re = adaptive_simpson([&](double q) { return density(q) * std::cos(2.0 * k * q); },
                                       lo, hi, 1e-12);
    const double im = adaptive_simpson([&](double q) { return -density(q) * std::sin(2.0 * k * q); },
                                       lo, hi, 1e-12);
    return {re, im};
}

double gaussian_visibility_exact(double sigma, double k) {
    return std::exp(-2.0 * k * k * sigma * sigma);
}

} // namespace qslit::oracle
