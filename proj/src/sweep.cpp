#include "qslit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include <omp.h>

#include "qslit/dynamics.hpp"
#include "qslit/errors.hpp"
#include "qslit/kernels.hpp"
#include "qslit/observables.hpp"
#include "qslit/rng.hpp"

namespace qslit {

namespace {

std::vector<double> sweep_grid(const SweepDescriptor& d) {
    if (d.points < 3) throw ContractViolation("sweep: at least 3 points required");
    if (!(d.from > 0.0) && d.log_scale)
        throw ContractViolation("sweep: log scale requires positive endpoints");
    if (d.from == d.to) throw ContractViolation("sweep: endpoints coincide");
    std::vector<double> values(static_cast<std::size_t>(d.points));
    const double n1 = static_cast<double>(d.points - 1);
    for (int i = 0; i < d.points; ++i) {
        const double t = static_cast<double>(i) / n1;
        values[static_cast<std::size_t>(i)] =
            d.log_scale ? d.from * std::pow(d.to / d.from, t) : d.from + (d.to - d.from) * t;
    }
    return values;
}

ScenarioConfig apply_parameter(const ScenarioConfig& base, const std::string& name, double value) {
    ScenarioConfig c = base;
    if (name == "wall.width") {
        c.wall.width = value;
    } else if (name == "kick") {
        c.kick = value;
    } else {
        throw ContractViolation("sweep: unknown parameter '" + name + "'");
    }
    return c;
}

/// Smallest interval carrying all but epsilon of the mass of a sampled
/// density (position-side companion of momentum_support_width).
double density_support_width(const std::vector<double>& density, double step, double epsilon) {
    double total = 0.0;
    for (double v : density) total += v;
    const double target = (1.0 - epsilon) * total;
    std::size_t best = density.size();
    std::size_t lo = 0;
    double acc = 0.0;
    for (std::size_t hi = 0; hi < density.size(); ++hi) {
        acc += density[hi];
        while (lo < hi && acc - density[lo] >= target) acc -= density[lo++];
        if (acc >= target) best = std::min(best, hi - lo + 1);
    }
    return static_cast<double>(best) * step;
}

std::string sanitize_status(std::string s) {
    for (char& ch : s)
        if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
    return s;
}

SweepRow evaluate_cell(const ScenarioConfig& config, double param_value, Rng& rng) {
    SweepRow row;
    row.param = param_value;

    const WaveFunction xi = build_state(config.wall, config.grid);
    const WaveFunction xi_pos = in_representation(xi, Representation::Position);
    const WaveFunction xi_mom = in_representation(xi, Representation::Momentum);

    const BranchPair branches = run_pipeline(config);
    const double k = branches.applied_kick;

    const VisibilityReport vis = visibility(xi, config.kick);
    row.visibility = vis.visibility;
    row.helstrom = helstrom_score(vis.visibility);

    row.sigma_Q = moments(xi_pos).std_dev;
    row.sigma_P = moments(xi_mom).std_dev;
    row.delta_P_support = momentum_support_width(xi, 0.01);
    {
        std::vector<double> qdens(xi_pos.size());
        for (std::size_t j = 0; j < qdens.size(); ++j)
            qdens[j] = std::norm(xi_pos.amplitudes()[j]);
        row.delta_Q_support = density_support_width(qdens, xi_pos.grid().spacing(), 0.01);
    }
    row.uncertainty_product = row.sigma_Q * row.delta_P_support;
    row.kennard_ok = kennard_audit(xi).satisfied;

    const double pivot = config.pivot_p0 ? *config.pivot_p0 : moments(xi_mom).mean;
    row.accuracy = monte_carlo_accuracy(branches, PathInferenceRule{pivot, k},
                                        config.mc_samples, rng);
    return row;
}

} // namespace

double monte_carlo_accuracy(const BranchPair& branches, const PathInferenceRule& rule,
                            int samples, Rng& rng) {
    if (samples < 1) throw ContractViolation("monte_carlo_accuracy: samples must be positive");

    const std::vector<double> screen = screen_distribution(branches);
    const DiscreteSampler screen_sampler(screen);

    const WaveFunction lobe1 = in_representation(branches.slit1.wall, Representation::Momentum);
    const WaveFunction lobe2 = in_representation(branches.slit2.wall, Representation::Momentum);
    std::vector<double> d1(lobe1.size()), d2(lobe2.size());
    for (std::size_t m = 0; m < d1.size(); ++m) {
        d1[m] = std::norm(lobe1.amplitudes()[m]);
        d2[m] = std::norm(lobe2.amplitudes()[m]);
    }
    const DiscreteSampler lobe1_sampler(d1), lobe2_sampler(d2);

    const auto& psi1 = branches.slit1.particle.amplitudes();
    const auto& psi2 = branches.slit2.particle.amplitudes();
    const GridSpec& grid = branches.slit1.wall.grid();

    long long correct = 0;
    for (int s = 0; s < samples; ++s) {
        const std::size_t jq = screen_sampler.sample(rng);
        const double w1 = std::norm(psi1[jq]);
        const double w2 = std::norm(psi2[jq]);
        const bool from_slit1 = rng.uniform() * (w1 + w2) < w1;
        const std::size_t jp = from_slit1 ? lobe1_sampler.sample(rng) : lobe2_sampler.sample(rng);
        const PathLabel label = classify_path(grid.momentum(jp), rule);
        if ((from_slit1 && label == PathLabel::Slit1) || (!from_slit1 && label == PathLabel::Slit2))
            ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(samples);
}

SweepResult run_sweep(const ScenarioConfig& base, const SweepDescriptor& descriptor) {
    if (!base.seed_set)
        throw ContractViolation("sweep: a seed is required for Monte Carlo accuracy");
    if (base.mc_samples < 1) throw ContractViolation("sweep: mc_samples must be positive");

    const std::vector<double> values = sweep_grid(descriptor);

    SweepResult result;
    result.parameter = descriptor.parameter;
    result.seed = base.seed;
    result.mc_samples = base.mc_samples;
    result.applied_kick = snap_momentum(base.grid, base.kick);
    result.rows.resize(values.size());

    // validate the parameter name before launching the team
    (void)apply_parameter(base, descriptor.parameter, values.front());

    const int nt = kernels::max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt > 0 ? nt : omp_get_max_threads())
    for (long long i = 0; i < static_cast<long long>(values.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        Rng rng(mix_seed(base.seed, idx));
        try {
            const ScenarioConfig cell = apply_parameter(base, descriptor.parameter, values[idx]);
            result.rows[idx] = evaluate_cell(cell, values[idx], rng);
        } catch (const std::exception& e) {
            SweepRow failed;
            failed.param = values[idx];
            failed.status = sanitize_status(std::string("error: ") + e.what());
            result.rows[idx] = failed;
        }
    }
    return result;
}

FrontierVerdict incompatibility_frontier(const SweepResult& result, double v_min, double acc_min) {
    if (!(v_min >= 0.0 && v_min < 1.0) || !(acc_min >= 0.0 && acc_min < 1.0))
        throw ContractViolation("frontier: thresholds must lie in [0, 1)");
    FrontierVerdict verdict;
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const SweepRow& row = result.rows[i];
        if (row.status == "ok" && row.visibility >= v_min && row.accuracy >= acc_min)
            verdict.witnesses.push_back(i);
    }
    verdict.compatible = !verdict.witnesses.empty();
    return verdict;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out = "param,sigma_Q,delta_P_support,visibility,accuracy,uncertainty_product,status\n";
    char line[512];
    for (const SweepRow& row : result.rows) {
        std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%s\n", row.param,
                      row.sigma_Q, row.delta_P_support, row.visibility, row.accuracy,
                      row.uncertainty_product, row.status.c_str());
        out += line;
    }
    return out;
}

} // namespace qslit
