#include "qslit/states.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qslit/errors.hpp"
#include "qslit/kernels.hpp"

namespace qslit {

namespace {

// 16 samples across the full width at half maximum of the narrowest
// feature. For a Gaussian of std-dev sigma the FWHM is 2 sqrt(2 ln 2) sigma.
constexpr double kMinSamplesPerFeature = 16.0;
constexpr double kGaussianFwhm = 2.3548200450309493;

void require_feature_resolved(double feature_width, double step, const char* what) {
    if (feature_width < kMinSamplesPerFeature * step)
        throw NumericalError(std::string("grid too coarse: ") + what + " spans fewer than 16 samples");
}

std::vector<cplx> gaussian_amplitudes(const GridSpec& grid, Representation rep, double center,
                                      double sigma, double carrier) {
    std::vector<cplx> amps(grid.n_points());
    for (std::size_t j = 0; j < amps.size(); ++j) {
        const double x = rep == Representation::Position ? grid.position(j) : grid.momentum(j);
        const double d = x - center;
        const double envelope = std::exp(-d * d / (4.0 * sigma * sigma));
        const double phase = carrier * d / kHbar;
        amps[j] = envelope * cplx(std::cos(phase), std::sin(phase));
    }
    return amps;
}

WaveFunction build_gaussian(const StateSpec& spec, const GridSpec& grid, Representation rep) {
    const double step = rep == Representation::Position ? grid.spacing() : grid.momentum_spacing();
    require_feature_resolved(kGaussianFwhm * spec.width, step, "Gaussian envelope");
    auto psi = WaveFunction::normalized(
        grid, rep, gaussian_amplitudes(grid, rep, spec.center, spec.width, spec.carrier));
    // A Gaussian must fit in both representations; hard-edged momentum kinds
    // are exempt because their position image has heavy tails by design.
    const WaveFunction other =
        rep == Representation::Position ? to_momentum(psi) : to_position(psi);
    require_edge_decay(other, "conjugate representation of a Gaussian state");
    return psi;
}

WaveFunction build_top_hat(const StateSpec& spec, const GridSpec& grid) {
    const double dp = grid.momentum_spacing();
    require_feature_resolved(spec.width, dp, "top-hat window");
    const double lo = spec.center - 0.5 * spec.width;
    const double hi = spec.center + 0.5 * spec.width;
    if (lo <= -grid.max_momentum() + dp || hi >= grid.max_momentum() - dp)
        throw NumericalError("grid too small: top-hat support reaches the momentum grid edge");
    std::vector<cplx> amps(grid.n_points());
    for (std::size_t m = 0; m < amps.size(); ++m) {
        const double p = grid.momentum(m);
        amps[m] = (p >= lo && p <= hi) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    }
    return WaveFunction::normalized(grid, Representation::Momentum, std::move(amps));
}

WaveFunction build_two_lobe_sine(const StateSpec& spec, const GridSpec& grid) {
    const double dp = grid.momentum_spacing();
    // Snap k to the momentum lattice so the +/-k shifts used downstream are
    // exact index translations; the exact cancellation depends on it.
    const double k = std::llround(spec.kick_scale / dp) * dp;
    if (!(k > 0.0)) throw NumericalError("grid too coarse: kick scale below one momentum step");
    // The narrowest structure is the half-arch of the second-harmonic lobe.
    require_feature_resolved(0.5 * k, dp, "sine lobe");
    if (2.0 * k >= grid.max_momentum() - dp)
        throw NumericalError("grid too small: sine support reaches the momentum grid edge");
    std::vector<cplx> amps(grid.n_points());
    for (std::size_t m = 0; m < amps.size(); ++m) {
        const double p = grid.momentum(m);
        double v = 0.0;
        if (p >= 0.0 && p <= 2.0 * k) {
            v = spec.amp_a * std::sin(std::numbers::pi * p / k);
        } else if (p >= -2.0 * k && p < 0.0) {
            v = spec.amp_b * std::sin(2.0 * std::numbers::pi * p / k);
        }
        amps[m] = cplx(v, 0.0);
    }
    return WaveFunction::normalized(grid, Representation::Momentum, std::move(amps));
}

} // namespace

const char* to_string(StateKind kind) {
    switch (kind) {
        case StateKind::GaussianPosition: return "gaussian_position";
        case StateKind::GaussianMomentum: return "gaussian_momentum";
        case StateKind::TopHatMomentum: return "tophat_momentum";
        case StateKind::TwoLobeSine: return "two_lobe_sine";
        case StateKind::PlaneWavePacket: return "plane_wave_packet";
    }
    return "?";
}

StateKind state_kind_from_string(const std::string& name) {
    if (name == "gaussian_position") return StateKind::GaussianPosition;
    if (name == "gaussian_momentum") return StateKind::GaussianMomentum;
    if (name == "tophat_momentum") return StateKind::TopHatMomentum;
    if (name == "two_lobe_sine") return StateKind::TwoLobeSine;
    if (name == "plane_wave_packet") return StateKind::PlaneWavePacket;
    throw ContractViolation("unknown state kind '" + name + "'");
}

void validate_state_spec(const StateSpec& spec) {
    switch (spec.kind) {
        case StateKind::GaussianPosition:
        case StateKind::GaussianMomentum:
        case StateKind::TopHatMomentum:
            if (!(spec.width > 0.0)) throw ContractViolation("state width must be positive");
            break;
        case StateKind::PlaneWavePacket:
            if (!(spec.width > 0.0)) throw ContractViolation("state width must be positive");
            if (spec.carrier == 0.0)
                throw ContractViolation("plane_wave_packet requires a nonzero carrier momentum");
            break;
        case StateKind::TwoLobeSine:
            if (!(spec.kick_scale > 0.0))
                throw ContractViolation("two_lobe_sine requires kick_scale > 0");
            if (spec.amp_a == 0.0 && spec.amp_b == 0.0)
                throw ContractViolation("two_lobe_sine requires a lobe weight");
            break;
    }
    if (spec.kind == StateKind::GaussianMomentum && spec.carrier != 0.0)
        throw ContractViolation("gaussian_momentum does not take a carrier momentum");
}

WaveFunction build_state(const StateSpec& spec, const GridSpec& grid) {
    validate_state_spec(spec);
    switch (spec.kind) {
        case StateKind::GaussianPosition:
        case StateKind::PlaneWavePacket:
            return build_gaussian(spec, grid, Representation::Position);
        case StateKind::GaussianMomentum:
            return build_gaussian(spec, grid, Representation::Momentum);
        case StateKind::TopHatMomentum:
            return build_top_hat(spec, grid);
        case StateKind::TwoLobeSine:
            return build_two_lobe_sine(spec, grid);
    }
    throw ContractViolation("build_state: unhandled state kind");
}

double momentum_support_width(const WaveFunction& psi, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 0.1))
        throw ContractViolation("momentum_support_width: epsilon must lie in (0, 0.1]");
    const WaveFunction tilde = in_representation(psi, Representation::Momentum);
    const double dp = tilde.grid().momentum_spacing();

    const std::size_t n = tilde.size();
    std::vector<double> mass(n);
    double total = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        mass[m] = std::norm(tilde.amplitudes()[m]) * dp;
        total += mass[m];
    }
    const double target = (1.0 - epsilon) * total;

    // Smallest contiguous window whose mass reaches the target.
    std::size_t best = n;
    std::size_t lo = 0;
    double acc = 0.0;
    for (std::size_t hi = 0; hi < n; ++hi) {
        acc += mass[hi];
        while (acc - mass[lo] >= target && lo < hi) {
            acc -= mass[lo];
            ++lo;
        }
        if (acc >= target) {
            const std::size_t len = hi - lo + 1;
            if (len < best) best = len;
        }
    }
    return static_cast<double>(best) * dp;
}

} // namespace qslit
