#include "qslit/kernels.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <omp.h>

namespace qslit::kernels {

namespace {

std::atomic<int> g_max_threads{0};

// Twiddle tables are shared across transforms of the same size. Only the
// map access is locked; the tables themselves are immutable once built.
std::mutex g_twiddle_mutex;
std::map<std::size_t, std::shared_ptr<const std::vector<cplx>>> g_twiddles;

std::shared_ptr<const std::vector<cplx>> twiddles_for(std::size_t n) {
    std::lock_guard<std::mutex> lock(g_twiddle_mutex);
    auto it = g_twiddles.find(n);
    if (it != g_twiddles.end()) return it->second;
    auto table = std::make_shared<std::vector<cplx>>(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        (*table)[j] = cplx(std::cos(angle), std::sin(angle));
    }
    g_twiddles.emplace(n, table);
    return table;
}

void bit_reverse_permute(cplx* a, std::size_t n) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i < j) std::swap(a[i], a[j]);
        std::size_t mask = n >> 1;
        while (j & mask) {
            j &= ~mask;
            mask >>= 1;
        }
        j |= mask;
    }
}

} // namespace

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() { return g_max_threads.load(); }

namespace detail {

int active_threads(std::size_t work) {
    if (work < kParallelCutoff) return 1;
    int nt = omp_get_max_threads();
    const int cap = g_max_threads.load();
    if (cap > 0 && cap < nt) nt = cap;
    return nt > 0 ? nt : 1;
}

} // namespace detail

void fft_inplace(cplx* a, std::size_t n, FftDirection dir) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_inplace: length must be a power of two");
    if (n == 1) return;

    const auto twiddle = twiddles_for(n);
    const cplx* w = twiddle->data();

    bit_reverse_permute(a, n);

    const std::size_t half_n = n / 2;
    const int nt = detail::active_threads(n);
    for (std::size_t m = 2; m <= n; m <<= 1) {
        const std::size_t half = m / 2;
        const std::size_t stride = n / m; // step through the length-n table
        // One butterfly per b; group = b / half selects the block, t = b % half
        // the twiddle index. All butterflies of a stage touch disjoint slots.
#pragma omp parallel for schedule(static) num_threads(nt)
        for (long long b = 0; b < static_cast<long long>(half_n); ++b) {
            const std::size_t group = static_cast<std::size_t>(b) / half;
            const std::size_t t = static_cast<std::size_t>(b) % half;
            const std::size_t top = group * m + t;
            const std::size_t bot = top + half;
            cplx tw = w[t * stride];
            if (dir == FftDirection::Backward) tw = std::conj(tw);
            const cplx u = a[top];
            const cplx v = a[bot] * tw;
            a[top] = u + v;
            a[bot] = u - v;
        }
    }
}

void rotate_copy(const cplx* in, cplx* out, std::size_t n, long long shift) {
    const long long nn = static_cast<long long>(n);
    long long s = shift % nn;
    if (s < 0) s += nn;
    const std::size_t us = static_cast<std::size_t>(s);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + us;
        if (j >= n) j -= n;
        out[j] = in[i];
    }
}

} // namespace qslit::kernels
