#pragma once

// Serial reference implementations used by tests and the benchmark to
// check the parallel kernels. Plain loops, no blocking, no OpenMP.

#include "qslit/grid.hpp"

namespace qslit::ref {

/// Direct O(n^2) evaluation of the centered continuum transform
/// out_m = step/sqrt(2 pi hbar) * sum_j in_j e^{-i p_m x_j / hbar}
/// (conjugate kernel for the backward direction). No FFT, no sign tricks.
WaveFunction naive_transform(const WaveFunction& psi);

/// Plain left-to-right accumulation of |a_j|^2 * step.
double norm_squared_plain(const WaveFunction& psi);

/// Plain left-to-right inner product sum conj(a_j) b_j * step.
cplx overlap_plain(const WaveFunction& a, const WaveFunction& b);

} // namespace qslit::ref
