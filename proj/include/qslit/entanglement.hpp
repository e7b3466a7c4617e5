#pragma once

#include <complex>
#include <vector>

#include "qslit/dynamics.hpp"

namespace qslit {

using Cvec = std::vector<std::complex<double>>;
using Cmat = std::vector<Cvec>;  ///< row-major dense matrix

namespace linalg {

std::complex<double> dot(const Cvec& a, const Cvec& b);  ///< <a|b>, conjugates a
double norm(const Cvec& a);
Cvec normalized(Cvec a);
Cvec matvec(const Cmat& m, const Cvec& v);
std::complex<double> expectation(const Cmat& op, const Cvec& state);
/// Checks that basis is a complete orthonormal set for the given dimension.
bool is_orthonormal_basis(const std::vector<Cvec>& basis, std::size_t dim, double tol = 1e-10);

} // namespace linalg

/// Two-branch entangled state c1 |psi1>|xi1> + c2 |psi2>|xi2> of an
/// object space and a meter space, both finite dimensional. The factor
/// vectors are unit normalized; the coefficients absorb the joint
/// normalization including the branch overlap cross term.
class TwoBranchState {
public:
    /// Normalizes the total state; throws ContractViolation when a factor
    /// is not unit length, dimensions are below two, or the branches are
    /// antiparallel enough to leave no state.
    static TwoBranchState make(std::complex<double> c1, std::complex<double> c2, Cvec psi1,
                               Cvec psi2, Cvec xi1, Cvec xi2);

    std::complex<double> c1() const { return c1_; }
    std::complex<double> c2() const { return c2_; }
    const Cvec& psi1() const { return psi1_; }
    const Cvec& psi2() const { return psi2_; }
    const Cvec& xi1() const { return xi1_; }
    const Cvec& xi2() const { return xi2_; }
    std::size_t object_dim() const { return psi1_.size(); }
    std::size_t meter_dim() const { return xi1_.size(); }

    std::complex<double> object_overlap() const { return linalg::dot(psi1_, psi2_); }
    std::complex<double> meter_overlap() const { return linalg::dot(xi1_, xi2_); }

private:
    TwoBranchState() = default;
    std::complex<double> c1_{}, c2_{};
    Cvec psi1_, psi2_, xi1_, xi2_;
};

/// Outcome distribution of measuring the object in the given orthonormal
/// basis: |c1 <a|psi1>|^2 + |c2 <a|psi2>|^2 + 2 Re{...<xi1|xi2>}. The
/// interference term is weighted by the meter overlap, so orthogonal
/// meter states leave a plain mixture.
std::vector<double> object_outcome_distribution(const TwoBranchState& s,
                                                const std::vector<Cvec>& basis);

/// Same formula with object and meter roles exchanged.
std::vector<double> meter_outcome_distribution(const TwoBranchState& s,
                                               const std::vector<Cvec>& basis);

/// Conditional object state after reading meter outcome m:
/// c1 <m|xi1> |psi1> + c2 <m|xi2> |psi2>, normalized. Throws
/// NumericalError("outcome unreachable") when the outcome probability is
/// below 1e-14.
Cvec post_measurement_state(const TwoBranchState& s, const std::vector<Cvec>& meter_basis,
                            std::size_t m);

/// How much a meter readout changes the statistics of a test observable
/// diagonal in `object_basis`: distributions before and after, and their
/// total-variation distance.
struct DisturbanceReport {
    std::vector<double> before;
    std::vector<double> after;
    double total_variation = 0.0;
};

DisturbanceReport disturbance_report(const TwoBranchState& s, const std::vector<Cvec>& meter_basis,
                                     std::size_t m, const std::vector<Cvec>& object_basis);

/// Projects the grid model onto the two-branch abstraction: particle
/// factors become the object vectors, kicked wall factors the meter
/// vectors, with amplitudes scaled so euclidean inner products equal the
/// grid inner products.
TwoBranchState link_to_slit_model(const BranchPair& branches);

} // namespace qslit
