#include "qslit/observables.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qslit/errors.hpp"
#include "qslit/kernels.hpp"

namespace qslit {

namespace {

constexpr double kFormAgreement = 1e-9;

void normalize_density(std::vector<double>& density, double step, const char* what) {
    double mass = 0.0;
    for (double& v : density) {
        if (v < 0.0) {
            if (v < -1e-10)
                throw InternalConsistencyError(std::string(what) + ": density " +
                                               std::to_string(v) + " negative beyond tolerance");
            v = 0.0;
        }
        mass += v;
    }
    mass *= step;
    if (!(mass > 0.0)) throw InternalConsistencyError(std::string(what) + ": density has no mass");
    for (double& v : density) v /= mass;
}

} // namespace

VisibilityReport visibility(const WaveFunction& xi, double k) {
    if (!(k >= 0.0)) throw ContractViolation("visibility: k must be nonnegative");

    const GridSpec& grid = xi.grid();
    const double dp = grid.momentum_spacing();
    const long long bins = std::llround(k / dp);
    const double applied = static_cast<double>(bins) * dp;

    const WaveFunction pos = in_representation(xi, Representation::Position);
    const cplx* a = pos.amplitudes().data();
    const cplx position_form =
        kernels::block_sum_c(pos.size(),
                             [&](std::size_t j) {
                                 const double phase = -2.0 * applied * grid.position(j) / kHbar;
                                 return std::norm(a[j]) * cplx(std::cos(phase), std::sin(phase));
                             }) *
        grid.spacing();

    const WaveFunction mom = in_representation(xi, Representation::Momentum);
    std::vector<cplx> plus(mom.size()), minus(mom.size());
    kernels::rotate_copy(mom.amplitudes().data(), plus.data(), mom.size(), +bins);
    kernels::rotate_copy(mom.amplitudes().data(), minus.data(), mom.size(), -bins);
    const cplx momentum_form =
        kernels::block_sum_c(mom.size(),
                             [&](std::size_t m) { return std::conj(plus[m]) * minus[m]; }) *
        dp;

    if (std::abs(position_form - momentum_form) > kFormAgreement)
        throw InternalConsistencyError(
            "visibility: position and momentum forms disagree by " +
            std::to_string(std::abs(position_form - momentum_form)));

    VisibilityReport report;
    report.overlap_position = position_form;
    report.overlap_momentum = momentum_form;
    report.visibility = std::abs(position_form);
    report.phase_alpha = report.visibility > 0.0 ? std::arg(position_form) : 0.0;
    report.applied_kick = applied;
    if (report.visibility > 1.0 + 1e-10)
        throw InternalConsistencyError("visibility exceeds one: " +
                                       std::to_string(report.visibility));
    if (report.visibility > 1.0) report.visibility = 1.0;
    return report;
}

std::vector<double> screen_distribution(const BranchPair& branches) {
    const WaveFunction& psi1 = branches.slit1.particle;
    const WaveFunction& psi2 = branches.slit2.particle;
    if (psi1.representation() != Representation::Position ||
        psi2.representation() != Representation::Position)
        throw ContractViolation("screen_distribution: branch particle factors must be in position "
                                "representation");
    if (psi1.grid() != psi2.grid())
        throw ContractViolation("screen_distribution: branch grids differ");

    const cplx wall_overlap = overlap(branches.slit1.wall, branches.slit2.wall);

    const std::size_t n = psi1.size();
    std::vector<double> density(n);
    const cplx* a1 = psi1.amplitudes().data();
    const cplx* a2 = psi2.amplitudes().data();
    for (std::size_t j = 0; j < n; ++j) {
        const double cross = 2.0 * std::real(std::conj(a1[j]) * a2[j] * wall_overlap);
        density[j] = std::norm(a1[j]) + std::norm(a2[j]) + cross;
    }
    normalize_density(density, psi1.grid().spacing(), "screen_distribution");
    return density;
}

std::vector<double> conditional_momentum(const BranchPair& branches, double q) {
    const WaveFunction& psi1 = branches.slit1.particle;
    const WaveFunction& psi2 = branches.slit2.particle;
    const std::size_t j = psi1.grid().nearest_index(q); // throws if q is outside the grid

    const WaveFunction xi1 = in_representation(branches.slit1.wall, Representation::Momentum);
    const WaveFunction xi2 = in_representation(branches.slit2.wall, Representation::Momentum);

    const cplx w1 = psi1.amplitudes()[j];
    const cplx w2 = psi2.amplitudes()[j];

    const std::size_t n = xi1.size();
    std::vector<double> density(n);
    for (std::size_t m = 0; m < n; ++m)
        density[m] = std::norm(w1 * xi1.amplitudes()[m] + w2 * xi2.amplitudes()[m]);
    normalize_density(density, xi1.grid().momentum_spacing(), "conditional_momentum");
    return density;
}

const char* to_string(PathLabel label) {
    switch (label) {
        case PathLabel::Slit1: return "slit1";
        case PathLabel::Slit2: return "slit2";
        case PathLabel::Ambiguous: return "ambiguous";
    }
    return "?";
}

PathLabel classify_path(double momentum, const PathInferenceRule& rule) {
    if (!(rule.kick > 0.0)) throw ContractViolation("classify_path: rule requires kick > 0");
    const double d = momentum - rule.pivot;
    if (d > 0.0 && d <= 2.0 * rule.kick) return PathLabel::Slit1;
    if (d < 0.0 && d >= -2.0 * rule.kick) return PathLabel::Slit2;
    return PathLabel::Ambiguous;
}

KennardAudit kennard_audit(const WaveFunction& psi) {
    KennardAudit audit;

    const WaveFunction pos = in_representation(psi, Representation::Position);
    const WaveFunction mom = in_representation(psi, Representation::Momentum);
    if (pos.edge_amplitude() > kEdgeDecayThreshold ||
        mom.edge_amplitude() > kEdgeDecayThreshold) {
        audit.status = AuditStatus::MomentsUnresolved;
        audit.sigma_q = audit.sigma_p = audit.product = std::nan("");
        return audit;
    }

    audit.sigma_q = moments(pos).std_dev;
    audit.sigma_p = moments(mom).std_dev;
    audit.product = audit.sigma_q * audit.sigma_p;
    audit.satisfied = audit.product >= audit.bound - 1e-9;
    return audit;
}

double helstrom_score(double visibility) {
    double v = visibility;
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return std::sqrt(1.0 - v * v);
}

} // namespace qslit
