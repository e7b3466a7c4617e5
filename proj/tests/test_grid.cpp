#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qslit/kernels.hpp"
#include "qslit/dynamics.hpp"
#include "qslit/errors.hpp"

using namespace qslit;
using namespace qslit::testing;

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(GridSpec(0.0, 64), ContractViolation);
    CHECK_THROWS_AS(GridSpec(10.0, 8), ContractViolation);
    CHECK_THROWS_AS(GridSpec(10.0, 100), ContractViolation);

    const GridSpec grid(40.0, 1024);
    CHECK(grid.spacing() == doctest::Approx(40.0 / 1024));
    CHECK(grid.momentum_spacing() ==
          doctest::Approx(2.0 * std::numbers::pi / 40.0));
    CHECK(grid.position(512) == 0.0);
}

TEST_CASE("transform round trip and Parseval") {
    const GridSpec grid = unit_kick_grid(8, 1024);
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const WaveFunction psi = random_smooth_state(grid, rng);
        const WaveFunction tilde = to_momentum(psi);
        CHECK(std::abs(tilde.norm() - 1.0) < 1e-12);

        const WaveFunction back = to_position(tilde);
        CHECK(max_pointwise_diff(psi, back) < 1e-12);
    }
}

TEST_CASE("minimum-uncertainty Gaussian pair") {
    const GridSpec grid = unit_kick_grid(8, 1024);
    const WaveFunction psi = gaussian_position(grid, 0.0, 1.0);
    const WaveFunction tilde = to_momentum(psi);

    const Moments m = moments(tilde);
    CHECK(std::abs(m.mean) < 1e-10);
    CHECK(m.std_dev == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("carrier momentum shifts the momentum amplitudes") {
    const GridSpec grid = unit_kick_grid(8, 1024);
    const double k0 = 2.0; // 16 momentum bins
    const WaveFunction plain = gaussian_position(grid, 0.0, 1.0);
    const WaveFunction boosted = gaussian_position(grid, 0.0, 1.0, k0);

    const WaveFunction tilde_plain = to_momentum(plain);
    const WaveFunction tilde_boosted = to_momentum(boosted);

    const long long bins = std::llround(k0 / grid.momentum_spacing());
    std::vector<cplx> shifted(tilde_plain.size());
    kernels::rotate_copy(tilde_plain.amplitudes().data(), shifted.data(), shifted.size(), bins);
    const WaveFunction expected =
        WaveFunction::raw(grid, Representation::Momentum, std::move(shifted));
    CHECK(max_pointwise_diff(tilde_boosted, expected) < 1e-12);
}

TEST_CASE("moments of shifted and symmetric states") {
    const GridSpec grid(40.0, 2048);
    const WaveFunction g = gaussian_position(grid, 2.0, 0.7);
    const Moments m = moments(g);
    CHECK(m.mean == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(m.std_dev == doctest::Approx(0.7).epsilon(1e-6));

    const WaveFunction sym = gaussian_position(grid, 0.0, 1.3);
    CHECK(std::abs(moments(sym).mean) < 1e-10);
}

TEST_CASE("top-hat position spread matches the uniform-distribution value") {
    const GridSpec grid(40.0, 4096);
    // Cell-centered top hat: M cells tiling [c - W/2, c + W/2].
    const std::size_t first = 1500, count = 1024;
    const double width = static_cast<double>(count) * grid.spacing();
    std::vector<cplx> amps(grid.n_points());
    for (std::size_t j = first; j < first + count; ++j) amps[j] = 1.0;
    const WaveFunction hat =
        WaveFunction::normalized(grid, Representation::Position, std::move(amps));

    const double expected = width / std::sqrt(12.0);
    CHECK(std::abs(moments(hat).std_dev - expected) < 1e-4);
}

TEST_CASE("overlap contracts and unitarity") {
    const GridSpec grid = unit_kick_grid(8, 1024);
    Rng rng(5);
    const WaveFunction a = random_smooth_state(grid, rng);
    const WaveFunction b = random_smooth_state(grid, rng);

    CHECK(std::abs(overlap(a, a) - cplx(1.0)) < 1e-10);
    CHECK(std::abs(overlap(a, b)) <= 1.0 + 1e-10);

    // same value in the conjugate representation
    const cplx pos = overlap(a, b);
    const cplx mom = overlap(to_momentum(a), to_momentum(b));
    CHECK(std::abs(pos - mom) < 1e-10);

    const GridSpec other(80.0, 1024);
    Rng rng2(6);
    const WaveFunction c = random_smooth_state(other, rng2);
    CHECK_THROWS_AS((void)overlap(a, c), ContractViolation);
    CHECK_THROWS_AS((void)overlap(a, to_momentum(b)), ContractViolation);
}

TEST_CASE("disjoint wavepackets have vanishing overlap") {
    const GridSpec grid(80.0, 2048);
    const WaveFunction a = gaussian_position(grid, -15.0, 1.0);
    const WaveFunction b = gaussian_position(grid, 15.0, 1.0); // 30 sigma apart
    CHECK(std::abs(overlap(a, b)) < 1e-10);
}

TEST_CASE("representation tag is enforced") {
    const GridSpec grid = unit_kick_grid(8, 1024);
    const WaveFunction psi = gaussian_position(grid, 0.0, 1.0);
    const WaveFunction tilde = to_momentum(psi);
    CHECK_THROWS_AS((void)to_momentum(tilde), ContractViolation);
    CHECK_THROWS_AS((void)to_position(psi), ContractViolation);
}

TEST_CASE("states touching the boundary are rejected") {
    const GridSpec grid(20.0, 256);
    StateSpec spec;
    spec.kind = StateKind::GaussianPosition;
    spec.center = 8.0; // tail reaches the edge at x = 10
    spec.width = 1.5;
    CHECK_THROWS_WITH_AS((void)build_state(spec, grid),
                         doctest::Contains("grid too small"), NumericalError);
}

TEST_CASE("moments require a normalized state") {
    const GridSpec grid(40.0, 1024);
    std::vector<cplx> amps(grid.n_points());
    amps[400] = 1.0;
    const WaveFunction raw = WaveFunction::raw(grid, Representation::Position, std::move(amps));
    CHECK_THROWS_AS((void)moments(raw), ContractViolation);
}
