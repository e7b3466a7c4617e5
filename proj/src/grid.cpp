#include "qslit/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qslit/errors.hpp"
#include "qslit/kernels.hpp"

namespace qslit {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

GridSpec::GridSpec(double length, std::size_t n_points) : length_(length), n_(n_points) {
    if (!(length > 0.0)) throw ContractViolation("GridSpec: length must be positive");
    if (n_points < 16 || !is_pow2(n_points))
        throw ContractViolation("GridSpec: n_points must be a power of two and at least 16");
}

double GridSpec::momentum_spacing() const { return kTwoPi * kHbar / length_; }

std::size_t GridSpec::nearest_index(double x) const {
    const double half = 0.5 * length_;
    if (!(x >= -half && x <= half))
        throw ContractViolation("GridSpec: coordinate " + std::to_string(x) + " outside grid");
    const double j = x / spacing() + static_cast<double>(n_ / 2);
    long long idx = std::llround(j);
    if (idx < 0) idx = 0;
    if (idx >= static_cast<long long>(n_)) idx = static_cast<long long>(n_) - 1;
    return static_cast<std::size_t>(idx);
}

const char* to_string(Representation rep) {
    return rep == Representation::Position ? "position" : "momentum";
}

WaveFunction WaveFunction::raw(GridSpec grid, Representation rep, std::vector<cplx> amplitudes) {
    if (amplitudes.size() != grid.n_points())
        throw ContractViolation("WaveFunction: amplitude count does not match grid");
    return WaveFunction(grid, rep, std::move(amplitudes));
}

WaveFunction WaveFunction::normalized(GridSpec grid, Representation rep,
                                      std::vector<cplx> amplitudes) {
    WaveFunction psi = raw(grid, rep, std::move(amplitudes));
    const double n2 = psi.norm_squared();
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw ContractViolation("WaveFunction: amplitudes are not normalizable");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : psi.amplitudes_) a *= inv;
    require_edge_decay(psi, "construction");
    return psi;
}

double WaveFunction::step() const {
    return rep_ == Representation::Position ? grid_.spacing() : grid_.momentum_spacing();
}

double WaveFunction::coordinate(std::size_t j) const {
    return rep_ == Representation::Position ? grid_.position(j) : grid_.momentum(j);
}

double WaveFunction::norm_squared() const {
    const cplx* a = amplitudes_.data();
    return kernels::block_sum(amplitudes_.size(), [a](std::size_t i) { return std::norm(a[i]); }) *
           step();
}

double WaveFunction::norm() const { return std::sqrt(norm_squared()); }

double WaveFunction::edge_amplitude() const {
    const double lo = std::abs(amplitudes_.front());
    const double hi = std::abs(amplitudes_.back());
    return lo > hi ? lo : hi;
}

void require_edge_decay(const WaveFunction& psi, const char* context) {
    const double edge = psi.edge_amplitude();
    if (edge > kEdgeDecayThreshold)
        throw NumericalError(std::string("grid too small: |amplitude| = ") + std::to_string(edge) +
                             " at the " + to_string(psi.representation()) + " grid edge (" +
                             context + ")");
}

namespace {

// Centered-lattice transform. With x_j = (j-n/2)dx, p_m = (m-n/2)dP and
// n divisible by four, e^{-i p_m x_j} = (-1)^m (-1)^j e^{-2 pi i m j / n},
// so the continuum kernel reduces to sign flips around a standard DFT.
std::vector<cplx> centered_transform(const WaveFunction& psi, kernels::FftDirection dir,
                                     double scale) {
    const std::size_t n = psi.size();
    std::vector<cplx> work(psi.amplitudes().begin(), psi.amplitudes().end());
    for (std::size_t j = 1; j < n; j += 2) work[j] = -work[j];
    kernels::fft_inplace(work.data(), n, dir);
    for (std::size_t m = 0; m < n; ++m) {
        const double sign = (m & 1) ? -scale : scale;
        work[m] *= sign;
    }
    return work;
}

} // namespace

WaveFunction to_momentum(const WaveFunction& psi) {
    if (psi.representation() != Representation::Position)
        throw ContractViolation("to_momentum: input must be in position representation");
    const double scale = psi.grid().spacing() / std::sqrt(2.0 * std::numbers::pi * kHbar);
    auto amps = centered_transform(psi, kernels::FftDirection::Forward, scale);
    return WaveFunction::raw(psi.grid(), Representation::Momentum, std::move(amps));
}

WaveFunction to_position(const WaveFunction& psi) {
    if (psi.representation() != Representation::Momentum)
        throw ContractViolation("to_position: input must be in momentum representation");
    const double scale = psi.grid().momentum_spacing() / std::sqrt(2.0 * std::numbers::pi * kHbar);
    auto amps = centered_transform(psi, kernels::FftDirection::Backward, scale);
    return WaveFunction::raw(psi.grid(), Representation::Position, std::move(amps));
}

WaveFunction in_representation(const WaveFunction& psi, Representation rep) {
    if (psi.representation() == rep) return psi;
    return rep == Representation::Momentum ? to_momentum(psi) : to_position(psi);
}

Moments moments(const WaveFunction& psi) {
    const double n2 = psi.norm_squared();
    if (std::abs(n2 - 1.0) > 1e-6)
        throw ContractViolation("moments: state is not normalized");
    const cplx* a = psi.amplitudes().data();
    const std::size_t n = psi.size();
    const double step = psi.step();

    const double mean = kernels::block_sum(n, [&](std::size_t j) {
                            return psi.coordinate(j) * std::norm(a[j]);
                        }) * step;
    const double second = kernels::block_sum(n, [&](std::size_t j) {
                              const double x = psi.coordinate(j);
                              return x * x * std::norm(a[j]);
                          }) * step;
    double var = second - mean * mean;
    if (var < 0.0) {
        if (var < -1e-12)
            throw InternalConsistencyError("moments: variance " + std::to_string(var) +
                                           " negative beyond tolerance");
        var = 0.0;
    }
    return {mean, std::sqrt(var)};
}

cplx overlap(const WaveFunction& phi, const WaveFunction& chi) {
    if (phi.grid() != chi.grid())
        throw ContractViolation("overlap: operands live on different grids");
    if (phi.representation() != chi.representation())
        throw ContractViolation("overlap: operands use different representations");
    const cplx* p = phi.amplitudes().data();
    const cplx* c = chi.amplitudes().data();
    return kernels::block_sum_c(phi.size(),
                                [p, c](std::size_t i) { return std::conj(p[i]) * c[i]; }) *
           phi.step();
}

} // namespace qslit
