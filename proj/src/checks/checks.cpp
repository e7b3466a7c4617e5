#include "checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "oracle/composite.hpp"
#include "oracle/quadrature.hpp"
#include "oracle/tensor.hpp"
#include "qslit/dynamics.hpp"
#include "qslit/entanglement.hpp"
#include "qslit/kernels.hpp"
#include "qslit/observables.hpp"
#include "qslit/recoil.hpp"
#include "qslit/rng.hpp"
#include "qslit/states.hpp"
#include "qslit/sweep.hpp"

namespace qslit::checks {

namespace {

struct Failure {
    std::string what;
};

void expect(bool condition, const std::string& message) {
    if (!condition) throw Failure{message};
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

// ---- shared scenario builders -------------------------------------------

GridSpec unit_kick_grid(int m, std::size_t n) {
    return GridSpec(2.0 * std::numbers::pi * m, n);
}

StateSpec gaussian_spec(double sigma, double center = 0.0) {
    StateSpec s;
    s.kind = StateKind::GaussianPosition;
    s.center = center;
    s.width = sigma;
    return s;
}

ScenarioConfig path_scenario(const GridSpec& grid) {
    ScenarioConfig c;
    c.grid = grid;
    c.particle = gaussian_spec(3.0);
    c.wall = gaussian_spec(1.0);
    c.kick = 1.0;
    c.tau = 0.5;
    c.tau_prime = 3.0;
    c.slit.mode = SlitMode::Partition;
    c.seed = 20250810;
    c.seed_set = true;
    return c;
}

ScenarioConfig composite_scenario(SlitMode mode) {
    ScenarioConfig c;
    c.grid = GridSpec(40.0, 128);
    c.particle = gaussian_spec(2.2);
    c.wall = gaussian_spec(2.2);
    c.kick = 1.0;
    c.tau = 0.4;
    c.tau_prime = 2.0;
    c.slit.mode = mode;
    if (mode == SlitMode::Aperture) {
        c.slit.separation = 4.0;
        c.slit.width = 1.25;
    }
    return c;
}

ScenarioConfig sweep_scenario() {
    ScenarioConfig c;
    c.grid = GridSpec(32.0 * std::numbers::pi, 16384);
    c.particle = gaussian_spec(3.0);
    c.wall = gaussian_spec(1.0);
    c.kick = 1.0;
    c.tau = 0.5;
    c.tau_prime = 4.0;
    c.slit.mode = SlitMode::Partition;
    c.seed = 20250810;
    c.seed_set = true;
    c.mc_samples = 10000;
    return c;
}

SweepDescriptor gaussian_sweep() {
    SweepDescriptor d;
    d.parameter = "wall.width";
    d.from = 0.05;
    d.to = 5.0;
    d.points = 21;
    d.log_scale = true;
    return d;
}

// ---- criteria -------------------------------------------------------------

std::string check_recoil_numbers() {
    const auto table = recoil::reference_table();
    expect(table.size() == 2, "reference table incomplete");
    const double v_hg = table[0].velocity;
    const double v_na = table[1].velocity;
    expect(std::abs(v_hg - 7.9e-3) / 7.9e-3 < 0.02,
           "mercury recoil " + fmt(v_hg) + " not within 2% of 7.9e-3");
    expect(std::abs(v_na - 6.9e-6) / 6.9e-6 < 0.02,
           "sodium condensate recoil " + fmt(v_na) + " not within 2% of 6.9e-6");
    return "v(Hg) = " + fmt(v_hg) + " m/s, v(Na BEC) = " + fmt(v_na) + " m/s";
}

std::string check_gaussian_visibility_law() {
    const GridSpec grid = unit_kick_grid(8, 2048); // dP = 1/8: k = 1 exact
    const double k = 1.0;
    double worst = 0.0;
    for (double sigma : {0.25, 0.5, 1.0, 2.0}) {
        const WaveFunction xi = build_state(gaussian_spec(sigma), grid);
        const double computed = visibility(xi, k).visibility;
        const double closed = oracle::gaussian_visibility_exact(sigma, k);
        const double quad = std::abs(oracle::gaussian_visibility_quadrature(sigma, 0.0, k));
        expect(std::abs(quad - closed) < 1e-9,
               "quadrature oracle drifted from the closed form at sigma " + fmt(sigma));
        const double err = std::abs(computed - closed);
        worst = std::max(worst, err);
        expect(err < 1e-4, "visibility error " + fmt(err) + " at sigma " + fmt(sigma));
    }
    return "max |V - exp(-2 k^2 sigma^2)| = " + fmt(worst);
}

std::string check_sine_counterexample() {
    const GridSpec grid = unit_kick_grid(32, 4096);
    const double k = 1.0;
    const double dp = grid.momentum_spacing();
    double worst_v = 0.0;
    for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {0.4, 1.5}}) {
        StateSpec spec;
        spec.kind = StateKind::TwoLobeSine;
        spec.amp_a = a;
        spec.amp_b = b;
        spec.kick_scale = k;
        const WaveFunction xi = build_state(spec, grid);

        const double v = visibility(xi, k).visibility;
        worst_v = std::max(worst_v, v);
        expect(v < 1e-10, "sine-state visibility " + fmt(v) + " not below 1e-10");

        const WaveFunction tilde = in_representation(xi, Representation::Momentum);
        const long long bins = std::llround(k / dp);
        std::vector<cplx> plus(tilde.size()), minus(tilde.size());
        kernels::rotate_copy(tilde.amplitudes().data(), plus.data(), plus.size(), bins);
        kernels::rotate_copy(tilde.amplitudes().data(), minus.data(), minus.size(), -bins);
        std::size_t both = 0;
        for (std::size_t m = 0; m < plus.size(); ++m)
            if (std::abs(plus[m]) > 1e-12 && std::abs(minus[m]) > 1e-12) ++both;
        const double measure = static_cast<double>(both) * dp;
        expect(measure > 2.0 * k - 8.0 * dp && measure < 2.0 * k + 2.0 * dp,
               "shifted supports overlap on " + fmt(measure) + " instead of 2k");
    }
    return "visibility <= " + fmt(worst_v) + " with overlap measure 2k";
}

std::string check_perfect_path_regime() {
    const GridSpec grid = unit_kick_grid(32, 4096);
    ScenarioConfig config = path_scenario(grid);
    const double k = 1.0;
    const int samples = 10000;

    std::vector<std::pair<std::string, WaveFunction>> walls;
    for (double w : {1.0, 1.5, 1.9}) {
        StateSpec spec;
        spec.kind = StateKind::TopHatMomentum;
        spec.width = w * k;
        walls.emplace_back("tophat " + fmt(w) + "k", build_state(spec, grid));
    }
    {
        // hard-truncated momentum gaussian, support (-0.9k, 0.9k)
        std::vector<cplx> amps(grid.n_points());
        for (std::size_t m = 0; m < amps.size(); ++m) {
            const double p = grid.momentum(m);
            amps[m] = std::abs(p) < 0.9 * k ? std::exp(-p * p / (2.0 * 0.09)) : 0.0;
        }
        walls.emplace_back("truncated gaussian",
                           WaveFunction::normalized(grid, Representation::Momentum,
                                                    std::move(amps)));
    }

    int cell = 0;
    for (const auto& [name, xi] : walls) {
        const double support = momentum_support_width(xi, 1e-9);
        expect(support < 2.0 * k, name + ": support " + fmt(support) + " not below 2k");

        const double v = visibility(xi, k).visibility;
        expect(v < 1e-9, name + ": visibility " + fmt(v) + " not below 1e-9");

        // pipeline with this wall, sampled classification must be perfect
        BranchPair branches = run_pipeline(config);
        branches.slit1.wall = momentum_kick(xi, k, +1);
        branches.slit2.wall = momentum_kick(xi, k, -1);
        Rng rng(mix_seed(config.seed, 90 + cell++));
        const double accuracy =
            monte_carlo_accuracy(branches, PathInferenceRule{0.0, branches.applied_kick},
                                 samples, rng);
        expect(accuracy == 1.0, name + ": accuracy " + fmt(accuracy) + " below 1.0");
    }
    return fmt(static_cast<double>(walls.size())) + " wall states, accuracy 1.0 over 10^4 draws each";
}

std::string check_oracle_equivalence() {
    double worst = 0.0;
    for (SlitMode mode : {SlitMode::Partition, SlitMode::Aperture}) {
        const ScenarioConfig config = composite_scenario(mode);
        const BranchPair b = run_pipeline(config);
        const auto composite = oracle::run_composite_pipeline(config);

        const auto screen = screen_distribution(b);
        const auto marginal = oracle::composite_marginal_q(composite);
        for (std::size_t j = 0; j < screen.size(); ++j)
            worst = std::max(worst, std::abs(screen[j] - marginal[j]));

        for (double q : {0.3, -2.0, 4.4}) {
            const auto cond = conditional_momentum(b, q);
            const auto brute = oracle::composite_conditional_P(composite, q);
            for (std::size_t m = 0; m < cond.size(); ++m)
                worst = std::max(worst, std::abs(cond[m] - brute[m]));
        }
    }
    expect(worst < 1e-8, "factored vs composite max deviation " + fmt(worst));
    return "128x128 composite grid, max |factored - brute force| = " + fmt(worst);
}

std::string check_kennard_audit() {
    int audited = 0;
    const auto require_bound = [&](const WaveFunction& psi, const std::string& name) {
        const KennardAudit audit = kennard_audit(psi);
        if (audit.status == AuditStatus::MomentsUnresolved) return false;
        expect(audit.satisfied,
               name + ": product " + fmt(audit.product) + " below hbar/2 tolerance");
        ++audited;
        return true;
    };

    const GridSpec grid = unit_kick_grid(16, 4096);
    for (double sigma : {0.5, 1.0, 2.0})
        require_bound(build_state(gaussian_spec(sigma), grid), "gaussian " + fmt(sigma));

    // equality case to 1e-6
    const KennardAudit equality = kennard_audit(build_state(gaussian_spec(1.0), grid));
    expect(std::abs(equality.product - 0.5 * kHbar) < 1e-6,
           "gaussian product " + fmt(equality.product) + " not at hbar/2");

    {
        StateSpec s;
        s.kind = StateKind::GaussianMomentum;
        s.width = 0.7;
        require_bound(build_state(s, grid), "momentum gaussian");
    }
    {
        StateSpec s;
        s.kind = StateKind::PlaneWavePacket;
        s.width = 1.5;
        s.carrier = 2.0;
        require_bound(build_state(s, grid), "plane-wave packet");
    }
    {
        // chirped gaussian: strictly above the bound
        std::vector<cplx> amps(grid.n_points());
        for (std::size_t j = 0; j < amps.size(); ++j) {
            const double x = grid.position(j);
            amps[j] = std::exp(-x * x / 4.0) * std::polar(1.0, 0.5 * x * x);
        }
        require_bound(WaveFunction::normalized(grid, Representation::Position, std::move(amps)),
                      "chirped gaussian");
    }
    {
        StateSpec s;
        s.kind = StateKind::TwoLobeSine;
        s.amp_a = 1.0;
        s.amp_b = 1.0;
        s.kick_scale = 1.0;
        const GridSpec big(32768.0 * std::numbers::pi, 131072);
        expect(require_bound(build_state(s, big), "two-lobe sine"),
               "two-lobe sine moments should resolve on the large grid");
    }
    {
        // hard-edged momentum state: must be skipped with explicit status
        StateSpec s;
        s.kind = StateKind::TopHatMomentum;
        s.width = 1.5;
        const KennardAudit audit = kennard_audit(build_state(s, unit_kick_grid(32, 4096)));
        expect(audit.status == AuditStatus::MomentsUnresolved,
               "top-hat audit should report unresolved moments");
    }
    return fmt(audited) + " states audited, all above hbar/2 - 1e-9";
}

std::string check_incompatibility_frontier() {
    const SweepResult result = run_sweep(sweep_scenario(), gaussian_sweep());
    for (const SweepRow& row : result.rows)
        expect(row.status == "ok", "sweep cell failed: " + row.status);

    const FrontierVerdict verdict = incompatibility_frontier(result, 0.9, 0.99);
    expect(!verdict.compatible, "a sweep cell satisfied both thresholds");

    for (std::size_t i = 0; i + 1 < result.rows.size(); ++i) {
        expect(result.rows[i].visibility >= result.rows[i + 1].visibility,
               "visibility not ordered at row " + fmt(static_cast<double>(i)));
        expect(result.rows[i].accuracy <= result.rows[i + 1].accuracy,
               "accuracy not ordered at row " + fmt(static_cast<double>(i)));
        expect(result.rows[i].kennard_ok, "swept state failed the kennard audit");
    }
    double best_v_at_acc = 0.0;
    for (const SweepRow& row : result.rows)
        if (row.accuracy >= 0.99) best_v_at_acc = std::max(best_v_at_acc, row.visibility);
    return "no cell with V >= 0.9 and accuracy >= 0.99; best V at accuracy 0.99+ is " +
           fmt(best_v_at_acc);
}

std::string check_entanglement_framework() {
    Rng rng(4242);
    const auto random_unit = [&](std::size_t dim) {
        Cvec v(dim);
        for (auto& x : v) x = cplx(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
        return linalg::normalized(std::move(v));
    };
    const auto random_basis = [&](std::size_t dim) {
        std::vector<Cvec> basis;
        while (basis.size() < dim) {
            Cvec v = random_unit(dim);
            for (const Cvec& u : basis) {
                const cplx proj = linalg::dot(u, v);
                for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * u[i];
            }
            if (linalg::norm(v) > 1e-3) basis.push_back(linalg::normalized(std::move(v)));
        }
        return basis;
    };

    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t dh = 2 + trial % 7;
        const std::size_t dk = 2 + (trial / 3) % 7;
        const TwoBranchState s = TwoBranchState::make(
            cplx(0.4 + rng.uniform(), rng.uniform() - 0.5),
            cplx(0.4 + rng.uniform(), rng.uniform() - 0.5), random_unit(dh), random_unit(dh),
            random_unit(dk), random_unit(dk));
        const Cvec dense =
            oracle::dense_two_branch(s.c1(), s.c2(), s.psi1(), s.psi2(), s.xi1(), s.xi2());

        const auto obj_basis = random_basis(dh);
        const auto obj = object_outcome_distribution(s, obj_basis);
        const auto obj_oracle = oracle::dense_object_distribution(dense, obj_basis, dk);
        for (std::size_t a = 0; a < dh; ++a)
            worst = std::max(worst, std::abs(obj[a] - obj_oracle[a]));

        const auto met_basis = random_basis(dk);
        const auto met = meter_outcome_distribution(s, met_basis);
        const auto met_oracle = oracle::dense_meter_distribution(dense, met_basis, dh);
        const auto probs = met;
        for (std::size_t m = 0; m < dk; ++m)
            worst = std::max(worst, std::abs(met[m] - met_oracle[m]));

        for (std::size_t m = 0; m < dk; ++m) {
            if (probs[m] < 1e-8) continue;
            const Cvec post = post_measurement_state(s, met_basis, m);
            const Cvec want = oracle::dense_post_measurement(dense, met_basis, m, dh);
            worst = std::max(worst, std::abs(std::abs(linalg::dot(post, want)) - 1.0));
        }
    }
    expect(worst < 1e-12, "dense-oracle deviation " + fmt(worst));

    // orthogonal meter states: the interference term disappears
    const std::size_t dim = 4;
    const Cvec psi1 = random_unit(dim), psi2 = random_unit(dim);
    Cvec xi1 = random_unit(dim);
    Cvec xi2 = random_unit(dim);
    const cplx proj = linalg::dot(xi1, xi2);
    for (std::size_t i = 0; i < dim; ++i) xi2[i] -= proj * xi1[i];
    xi2 = linalg::normalized(std::move(xi2));
    const TwoBranchState s =
        TwoBranchState::make(cplx(0.8, 0.1), cplx(0.55, -0.2), psi1, psi2, xi1, xi2);
    const auto basis = random_basis(dim);
    const auto dist = object_outcome_distribution(s, basis);
    for (std::size_t a = 0; a < dim; ++a) {
        const double mixture = std::norm(s.c1() * linalg::dot(basis[a], psi1)) +
                               std::norm(s.c2() * linalg::dot(basis[a], psi2));
        expect(std::abs(dist[a] - mixture) < 1e-12, "interference term survived orthogonal meters");
    }

    // robertson on 1000 random pairs
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 2 + trial % 7;
        const Cvec state = random_unit(d);
        Cmat a(d, Cvec(d)), b(d, Cvec(d));
        for (std::size_t i = 0; i < d; ++i) {
            a[i][i] = cplx(2.0 * rng.uniform() - 1.0, 0.0);
            b[i][i] = cplx(2.0 * rng.uniform() - 1.0, 0.0);
            for (std::size_t j = i + 1; j < d; ++j) {
                a[i][j] = cplx(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
                a[j][i] = std::conj(a[i][j]);
                b[i][j] = cplx(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
                b[j][i] = std::conj(b[i][j]);
            }
        }
        const double ea = std::real(linalg::expectation(a, state));
        const double eb = std::real(linalg::expectation(b, state));
        const Cvec av = linalg::matvec(a, state);
        const Cvec bv = linalg::matvec(b, state);
        const double va = std::max(std::real(linalg::dot(av, av)) - ea * ea, 0.0);
        const double vb = std::max(std::real(linalg::dot(bv, bv)) - eb * eb, 0.0);
        const cplx comm = linalg::dot(av, bv) - linalg::dot(bv, av);
        expect(std::sqrt(va) * std::sqrt(vb) >= 0.5 * std::abs(comm) - 1e-10,
               "robertson violated at trial " + fmt(static_cast<double>(trial)));
    }
    return "dense-oracle deviation " + fmt(worst) + "; 1000 robertson pairs hold";
}

std::string check_determinism() {
    ScenarioConfig base = sweep_scenario();
    base.mc_samples = 2000;
    SweepDescriptor d = gaussian_sweep();
    d.points = 7;
    const std::string first = sweep_to_csv(run_sweep(base, d));
    const std::string second = sweep_to_csv(run_sweep(base, d));
    expect(first == second, "two sweeps with the same config and seed differ");
    expect(!first.empty(), "sweep produced no output");
    return "two in-process sweeps byte-identical (" + fmt(static_cast<double>(first.size())) +
           " bytes)";
}

CheckResult run_one(int index, const std::string& name,
                    const std::function<std::string()>& body) {
    CheckResult result;
    result.name = std::to_string(index) + ". " + name;
    const auto start = std::chrono::steady_clock::now();
    try {
        result.detail = body();
        result.passed = true;
    } catch (const Failure& f) {
        result.detail = f.what;
    } catch (const std::exception& e) {
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace

std::vector<CheckResult> run_all() {
    std::vector<CheckResult> results;
    results.push_back(run_one(1, "recoil numbers", check_recoil_numbers));
    results.push_back(run_one(2, "gaussian visibility law", check_gaussian_visibility_law));
    results.push_back(run_one(3, "zero-visibility sine state", check_sine_counterexample));
    results.push_back(run_one(4, "perfect path regime", check_perfect_path_regime));
    results.push_back(run_one(5, "composite-state oracle equivalence", check_oracle_equivalence));
    results.push_back(run_one(6, "kennard audit", check_kennard_audit));
    results.push_back(run_one(7, "incompatibility frontier", check_incompatibility_frontier));
    results.push_back(run_one(8, "two-branch entanglement framework",
                              check_entanglement_framework));
    results.push_back(run_one(9, "sweep determinism", check_determinism));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

} // namespace qslit::checks
