#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "oracle/stats.hpp"
#include "qslit/errors.hpp"

using namespace qslit;
using namespace qslit::testing;

namespace {

StateSpec tophat(double center, double width) {
    StateSpec s;
    s.kind = StateKind::TopHatMomentum;
    s.center = center;
    s.width = width;
    return s;
}

StateSpec two_lobe_sine(double a, double b, double k) {
    StateSpec s;
    s.kind = StateKind::TwoLobeSine;
    s.amp_a = a;
    s.amp_b = b;
    s.kick_scale = k;
    return s;
}

} // namespace

TEST_CASE("library states are normalized") {
    const GridSpec grid = unit_kick_grid(32, 4096);
    StateSpec g;
    g.kind = StateKind::GaussianPosition;
    g.width = 1.0;
    for (const StateSpec& spec :
         {g, tophat(0.0, 1.9), two_lobe_sine(1.0, 1.0, 1.0), two_lobe_sine(0.7, 0.0, 1.0),
          two_lobe_sine(0.0, 1.3, 1.0)}) {
        const WaveFunction psi = build_state(spec, grid);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("gaussian position state has the requested moments") {
    const GridSpec grid(40.0, 1024);
    const WaveFunction psi = gaussian_position(grid, 0.0, 1.0);
    const Moments m = moments(psi);
    CHECK(std::abs(m.mean) < 1e-6);
    CHECK(m.std_dev == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("kennard equality for the gaussian family") {
    const GridSpec grid = unit_kick_grid(8, 2048);
    for (double sigma : {0.5, 1.0, 2.0}) {
        const WaveFunction psi = gaussian_position(grid, 0.0, sigma);
        const double sq = moments(psi).std_dev;
        const double sp = moments(to_momentum(psi)).std_dev;
        CHECK(sq * sp == doctest::Approx(0.5 * kHbar).epsilon(1e-6));
    }
}

TEST_CASE("top-hat support stays inside the stated window") {
    const GridSpec grid = unit_kick_grid(32, 4096);
    const double k = 1.0;
    const double p0 = 0.5; // 16 momentum bins
    const WaveFunction psi = build_state(tophat(p0, 1.9 * k), grid);

    for (std::size_t m = 0; m < psi.size(); ++m) {
        if (std::abs(psi.amplitudes()[m]) > 0.0) {
            const double p = psi.grid().momentum(m);
            CHECK(p > p0 - k);
            CHECK(p < p0 + k);
        }
    }
}

TEST_CASE("two-lobe sine support is exactly [-2k, 2k]") {
    const GridSpec grid = unit_kick_grid(32, 4096);
    const double k = 1.0;
    const WaveFunction psi = build_state(two_lobe_sine(1.0, 1.0, k), grid);
    double lo = 1e300, hi = -1e300;
    for (std::size_t m = 0; m < psi.size(); ++m) {
        if (std::abs(psi.amplitudes()[m]) > 0.0) {
            const double p = psi.grid().momentum(m);
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
    }
    CHECK(lo >= -2.0 * k - grid.momentum_spacing());
    CHECK(hi <= 2.0 * k + grid.momentum_spacing());
    CHECK(hi - lo > 4.0 * k - 3.0 * grid.momentum_spacing());
}

TEST_CASE("momentum support width: exact for the top hat") {
    const GridSpec grid = unit_kick_grid(32, 4096);
    const double width = 1.5;
    const WaveFunction psi = build_state(tophat(0.0, width), grid);
    const double measured = momentum_support_width(psi, 1e-6);
    CHECK(std::abs(measured - width) <= grid.momentum_spacing() + 1e-12);
}

TEST_CASE("momentum support width: normal quantile oracle for gaussians") {
    const GridSpec grid = unit_kick_grid(32, 8192);
    const WaveFunction psi = gaussian_position(grid, 0.0, 1.0); // sigma_P = 0.5
    const double measured = momentum_support_width(psi, 0.05);
    const double expected = 2.0 * oracle::normal_quantile(1.0 - 0.05 / 2.0) * 0.5;
    CHECK(std::abs(measured - expected) / expected < 0.05);
}

TEST_CASE("momentum support width: sine state spans 4k") {
    const GridSpec grid = unit_kick_grid(32, 4096);
    const double k = 1.0;
    const WaveFunction psi = build_state(two_lobe_sine(1.0, 1.0, k), grid);
    const double measured = momentum_support_width(psi, 1e-6);
    CHECK(std::abs(measured - 4.0 * k) <= 2.0 * grid.momentum_spacing());
}

TEST_CASE("support width epsilon is range checked") {
    const GridSpec grid = unit_kick_grid(8, 1024);
    const WaveFunction psi = gaussian_position(grid, 0.0, 1.0);
    CHECK_THROWS_AS((void)momentum_support_width(psi, 0.0), ContractViolation);
    CHECK_THROWS_AS((void)momentum_support_width(psi, 0.2), ContractViolation);
}

TEST_CASE("state spec validation") {
    const GridSpec grid = unit_kick_grid(32, 4096);

    StateSpec bad_width;
    bad_width.kind = StateKind::GaussianPosition;
    bad_width.width = -1.0;
    CHECK_THROWS_AS((void)build_state(bad_width, grid), ContractViolation);

    CHECK_THROWS_AS((void)build_state(two_lobe_sine(0.0, 0.0, 1.0), grid), ContractViolation);

    StateSpec no_carrier;
    no_carrier.kind = StateKind::PlaneWavePacket;
    no_carrier.width = 1.0;
    CHECK_THROWS_AS((void)build_state(no_carrier, grid), ContractViolation);
}

TEST_CASE("under-resolved states are rejected as too coarse") {
    const GridSpec coarse(40.0, 64); // dx = 0.625, dP ~ 0.157
    StateSpec narrow;
    narrow.kind = StateKind::GaussianPosition;
    narrow.width = 1.0; // FWHM 2.35 < 16 * 0.625
    CHECK_THROWS_WITH_AS((void)build_state(narrow, coarse), doctest::Contains("grid too coarse"),
                         NumericalError);

    CHECK_THROWS_WITH_AS((void)build_state(tophat(0.0, 1.0), coarse),
                         doctest::Contains("grid too coarse"), NumericalError);

    const GridSpec fine_x(40.0, 4096); // dP unchanged: sine lobes under-resolved
    CHECK_THROWS_WITH_AS((void)build_state(two_lobe_sine(1.0, 1.0, 1.0), fine_x),
                         doctest::Contains("grid too coarse"), NumericalError);
}
