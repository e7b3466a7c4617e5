#pragma once

#include <complex>
#include <vector>

#include "qslit/dynamics.hpp"
#include "qslit/grid.hpp"

namespace qslit {

/// Fringe contrast V and phase alpha, defined through
/// V e^{i alpha} = <xi| e^{-2 i k Q / hbar} |xi>. The same number is
/// computed as the momentum-shift overlap integral of the wall state;
/// the two routes must agree.
struct VisibilityReport {
    double visibility = 0.0;   ///< |overlap_position|, in [0, 1]
    double phase_alpha = 0.0;  ///< arg of the overlap, in (-pi, pi]
    cplx overlap_position{};   ///< sum over Q of |xi(Q)|^2 e^{-2ikQ/hbar} dQ
    cplx overlap_momentum{};   ///< sum over P of conj(xi~(P-k)) xi~(P+k) dP
    double applied_kick = 0.0;
};

VisibilityReport visibility(const WaveFunction& xi, double k);

/// Screen density over the particle coordinate: the wall is traced out,
/// leaving |psi1|^2 + |psi2|^2 + 2 Re{conj(psi1) psi2 <xi+|xi->}.
/// Returned normalized (unit mass with the position step).
std::vector<double> screen_distribution(const BranchPair& branches);

/// Wall-momentum density conditioned on finding the particle at the grid
/// point nearest to q: |psi1(q) xi+(P) + psi2(q) xi-(P)|^2, normalized.
std::vector<double> conditional_momentum(const BranchPair& branches, double q);

enum class PathLabel { Slit1, Slit2, Ambiguous };

const char* to_string(PathLabel label);

/// Momentum windows that identify the slit: (pivot, pivot + 2k] points at
/// slit 1, [pivot - 2k, pivot) at slit 2, everything else is ambiguous.
struct PathInferenceRule {
    double pivot = 0.0;
    double kick = 0.0;
};

PathLabel classify_path(double momentum, const PathInferenceRule& rule);

enum class AuditStatus { Ok, MomentsUnresolved };

/// Position/momentum standard deviations and their product against the
/// hbar/2 bound. States whose tails reach the grid edge in either
/// representation get MomentsUnresolved instead of a bogus number.
struct KennardAudit {
    double sigma_q = 0.0;
    double sigma_p = 0.0;
    double product = 0.0;
    double bound = 0.5 * kHbar;
    bool satisfied = false;
    AuditStatus status = AuditStatus::Ok;
};

KennardAudit kennard_audit(const WaveFunction& psi);

/// Optimal two-state discrimination score sqrt(1 - V^2) for the kicked
/// wall states. Reported alongside sweeps as a convenience figure; not
/// part of the fringe/path analysis itself.
double helstrom_score(double visibility);

} // namespace qslit
