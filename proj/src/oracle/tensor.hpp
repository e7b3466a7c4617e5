#pragma once

// Dense tensor-product route for the two-branch framework: the full
// object (x) meter vector is materialized and every probability read off
// by explicit projection.

#include <complex>
#include <vector>

namespace qslit::oracle {

using Cvec = std::vector<std::complex<double>>;

/// c1 psi1 (x) xi1 + c2 psi2 (x) xi2, normalized as a dense vector of
/// dimension dim(psi) * dim(xi).
Cvec dense_two_branch(std::complex<double> c1, std::complex<double> c2, const Cvec& psi1,
                      const Cvec& psi2, const Cvec& xi1, const Cvec& xi2);

/// Probability of object outcome a: sum over the meter computational
/// basis of |<a (x) m | state>|^2.
std::vector<double> dense_object_distribution(const Cvec& state, const std::vector<Cvec>& basis,
                                              std::size_t meter_dim);

std::vector<double> dense_meter_distribution(const Cvec& state, const std::vector<Cvec>& basis,
                                             std::size_t object_dim);

/// Object state conditioned on meter outcome m of the given basis.
Cvec dense_post_measurement(const Cvec& state, const std::vector<Cvec>& meter_basis,
                            std::size_t m, std::size_t object_dim);

} // namespace qslit::oracle
