#include <doctest.h>

#include <complex>
#include <vector>

#include "helpers.hpp"
#include "qslit/kernels.hpp"
#include "ref/reference.hpp"

using namespace qslit;
using namespace qslit::testing;

namespace {

struct ThreadGuard {
    explicit ThreadGuard(int n) { kernels::set_max_threads(n); }
    ~ThreadGuard() { kernels::set_max_threads(0); }
};

} // namespace

TEST_CASE("fft matches the direct transform") {
    const GridSpec grid = unit_kick_grid(8, 512);
    Rng rng(42);
    const WaveFunction psi = random_smooth_state(grid, rng);

    const WaveFunction fast = to_momentum(psi);
    const WaveFunction slow = ref::naive_transform(psi);
    CHECK(max_pointwise_diff(fast, slow) < 1e-10);

    const WaveFunction back_fast = to_position(fast);
    const WaveFunction back_slow = ref::naive_transform(slow);
    CHECK(max_pointwise_diff(back_fast, back_slow) < 1e-10);
}

TEST_CASE("parallel kernels are bit-identical to single-threaded runs") {
    const GridSpec grid = unit_kick_grid(8, 8192);
    Rng rng(7);
    const WaveFunction psi = random_smooth_state(grid, rng, 6);

    std::vector<cplx> serial_amps, parallel_amps;
    double serial_norm = 0.0, parallel_norm = 0.0;
    {
        ThreadGuard guard(1);
        const WaveFunction tilde = to_momentum(psi);
        serial_amps.assign(tilde.amplitudes().begin(), tilde.amplitudes().end());
        serial_norm = psi.norm_squared();
    }
    {
        ThreadGuard guard(8);
        const WaveFunction tilde = to_momentum(psi);
        parallel_amps.assign(tilde.amplitudes().begin(), tilde.amplitudes().end());
        parallel_norm = psi.norm_squared();
    }
    CHECK(serial_norm == parallel_norm);
    REQUIRE(serial_amps.size() == parallel_amps.size());
    for (std::size_t i = 0; i < serial_amps.size(); ++i) {
        REQUIRE(serial_amps[i].real() == parallel_amps[i].real());
        REQUIRE(serial_amps[i].imag() == parallel_amps[i].imag());
    }
}

TEST_CASE("blocked reductions agree with plain loops") {
    const GridSpec grid = unit_kick_grid(8, 4096);
    Rng rng(3);
    const WaveFunction a = random_smooth_state(grid, rng);
    const WaveFunction b = random_smooth_state(grid, rng);

    CHECK(a.norm_squared() == doctest::Approx(ref::norm_squared_plain(a)).epsilon(1e-13));
    const cplx fast = overlap(a, b);
    const cplx slow = ref::overlap_plain(a, b);
    CHECK(std::abs(fast - slow) < 1e-13);
}

TEST_CASE("rotate_copy wraps indices") {
    std::vector<cplx> in{1.0, 2.0, 3.0, 4.0};
    std::vector<cplx> out(4);
    kernels::rotate_copy(in.data(), out.data(), 4, 1);
    CHECK(out[0] == cplx(4.0));
    CHECK(out[1] == cplx(1.0));
    kernels::rotate_copy(in.data(), out.data(), 4, -5);
    CHECK(out[0] == cplx(2.0));
    CHECK(out[3] == cplx(1.0));
}

TEST_CASE("fft rejects non-power-of-two lengths") {
    std::vector<cplx> data(24);
    CHECK_THROWS(kernels::fft_inplace(data.data(), data.size(), kernels::FftDirection::Forward));
}
