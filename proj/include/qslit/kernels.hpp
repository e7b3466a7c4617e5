#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qslit::kernels {

using cplx = std::complex<double>;

/// Caps the number of OpenMP threads the kernels may use. 0 restores the
/// runtime default. Every kernel produces bit-identical results for any
/// thread count: elementwise kernels write disjoint slots and reductions
/// accumulate in fixed-size blocks that are combined in index order.
void set_max_threads(int n);
int max_threads();

/// Block length of the deterministic reductions. Partial sums are formed
/// per block and then combined serially, so the rounding pattern does not
/// depend on the thread count.
inline constexpr std::size_t kReduceBlock = 4096;

/// Loops below this trip count run serially; spawning a team costs more
/// than the work.
inline constexpr std::size_t kParallelCutoff = 1 << 12;

namespace detail {
int active_threads(std::size_t work);
} // namespace detail

/// Deterministic blocked reduction of term(i) over i in [0, n).
template <class Term>
double block_sum(std::size_t n, Term&& term) {
    if (n == 0) return 0.0;
    const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<double> partial(nblocks, 0.0);
    const int nt = detail::active_threads(n);
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
        const std::size_t hi = lo + kReduceBlock < n ? lo + kReduceBlock : n;
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

/// Complex-valued variant of block_sum.
template <class Term>
cplx block_sum_c(std::size_t n, Term&& term) {
    if (n == 0) return {};
    const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<cplx> partial(nblocks, cplx{});
    const int nt = detail::active_threads(n);
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
        const std::size_t hi = lo + kReduceBlock < n ? lo + kReduceBlock : n;
        cplx acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    }
    cplx total{};
    for (const cplx& p : partial) total += p;
    return total;
}

/// Elementwise map: a[i] = f(i, a[i]).
template <class Fn>
void transform_inplace(cplx* a, std::size_t n, Fn&& f) {
    const int nt = detail::active_threads(n);
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const auto j = static_cast<std::size_t>(i);
        a[j] = f(j, a[j]);
    }
}

enum class FftDirection { Forward, Backward };

/// In-place radix-2 FFT, unnormalized (forward kernel e^{-2*pi*i*m*j/n}).
/// n must be a power of two. Butterflies within a stage are independent,
/// so the parallel path performs exactly the serial arithmetic.
void fft_inplace(cplx* a, std::size_t n, FftDirection dir);

/// Out-of-place circular rotation: out[(i + shift) mod n] = in[i].
void rotate_copy(const cplx* in, cplx* out, std::size_t n, long long shift);

} // namespace qslit::kernels
