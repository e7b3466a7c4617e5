#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qslit/dynamics.hpp"
#include "qslit/observables.hpp"
#include "qslit/rng.hpp"
#include "qslit/scenario.hpp"

namespace qslit {

/// Seeded Monte Carlo estimate of how often the window rule names the
/// branch correctly: draw the screen position from the fringe pattern,
/// draw the branch with the conditional weights |psi_alpha(q)|^2, draw the
/// wall momentum from that branch's kicked distribution, classify.
double monte_carlo_accuracy(const BranchPair& branches, const PathInferenceRule& rule,
                            int samples, Rng& rng);

/// One sweep cell. sigma_Q is the std-dev width of the wall state and
/// delta_P_support its 1%-mass momentum support; the product column pairs
/// those two, matching how the width arguments differ (an oscillatory
/// integral scale in Q, a support scale in P). sigma_P and delta_Q_support
/// report the opposite pairing for reference; they stay out of the CSV.
struct SweepRow {
    double param = 0.0;
    double sigma_Q = 0.0;
    double delta_P_support = 0.0;
    double visibility = 0.0;
    double accuracy = 0.0;
    double uncertainty_product = 0.0;
    std::string status = "ok";
    // companion numbers for the summary report
    double sigma_P = 0.0;
    double delta_Q_support = 0.0;
    double helstrom = 0.0;
    bool kennard_ok = false;
};

struct SweepResult {
    std::string parameter;
    double applied_kick = 0.0;
    std::uint64_t seed = 0;
    int mc_samples = 0;
    std::vector<SweepRow> rows;
};

/// Evaluates every cell of the descriptor: builds the wall state, runs the
/// pipeline, computes visibility, widths and a seeded Monte Carlo estimate
/// of the path-classification accuracy (sample the screen position, then
/// the branch, then the wall momentum; classify with the window rule).
/// Cells run in parallel; cell i derives its generator from (seed, i), so
/// the result is identical for any thread count. Failed cells carry their
/// error in `status` and the sweep continues.
SweepResult run_sweep(const ScenarioConfig& base, const SweepDescriptor& descriptor);

struct FrontierVerdict {
    bool compatible = false;  ///< some row clears both thresholds
    std::vector<std::size_t> witnesses;
};

/// Scans the sweep for rows with visibility >= v_min and accuracy >=
/// acc_min. Thresholds live in [0, 1); zero makes the check vacuous.
FrontierVerdict incompatibility_frontier(const SweepResult& result, double v_min, double acc_min);

/// Fixed-format CSV body (header plus one line per row, no metadata).
std::string sweep_to_csv(const SweepResult& result);

} // namespace qslit
