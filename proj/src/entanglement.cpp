#include "qslit/entanglement.hpp"

#include <cmath>
#include <string>

#include "qslit/errors.hpp"

namespace qslit {

namespace linalg {

std::complex<double> dot(const Cvec& a, const Cvec& b) {
    if (a.size() != b.size()) throw ContractViolation("dot: dimension mismatch");
    std::complex<double> acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double norm(const Cvec& a) { return std::sqrt(std::real(dot(a, a))); }

Cvec normalized(Cvec a) {
    const double n = norm(a);
    if (!(n > 0.0)) throw ContractViolation("normalized: zero vector");
    for (auto& v : a) v /= n;
    return a;
}

Cvec matvec(const Cmat& m, const Cvec& v) {
    Cvec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw ContractViolation("matvec: dimension mismatch");
        std::complex<double> acc{};
        for (std::size_t j = 0; j < v.size(); ++j) acc += m[i][j] * v[j];
        out[i] = acc;
    }
    return out;
}

std::complex<double> expectation(const Cmat& op, const Cvec& state) {
    return dot(state, matvec(op, state));
}

bool is_orthonormal_basis(const std::vector<Cvec>& basis, std::size_t dim, double tol) {
    if (basis.size() != dim) return false;
    for (std::size_t i = 0; i < dim; ++i) {
        if (basis[i].size() != dim) return false;
        for (std::size_t j = i; j < dim; ++j) {
            const std::complex<double> g = dot(basis[i], basis[j]);
            const std::complex<double> want = i == j ? 1.0 : 0.0;
            if (std::abs(g - want) > tol) return false;
        }
    }
    return true;
}

} // namespace linalg

TwoBranchState TwoBranchState::make(std::complex<double> c1, std::complex<double> c2, Cvec psi1,
                                    Cvec psi2, Cvec xi1, Cvec xi2) {
    if (psi1.size() < 2 || xi1.size() < 2)
        throw ContractViolation("TwoBranchState: each side needs dimension >= 2");
    if (psi1.size() != psi2.size() || xi1.size() != xi2.size())
        throw ContractViolation("TwoBranchState: branch dimensions differ");
    for (const Cvec* v : {&psi1, &psi2, &xi1, &xi2})
        if (std::abs(linalg::norm(*v) - 1.0) > 1e-10)
            throw ContractViolation("TwoBranchState: factor vectors must be unit length");

    const std::complex<double> s_obj = linalg::dot(psi1, psi2);
    const std::complex<double> s_met = linalg::dot(xi1, xi2);
    const double total2 = std::norm(c1) + std::norm(c2) +
                          2.0 * std::real(std::conj(c1) * c2 * s_obj * s_met);
    if (!(total2 > 1e-14)) throw ContractViolation("TwoBranchState: branches cancel, no state left");
    const double inv = 1.0 / std::sqrt(total2);

    TwoBranchState s;
    s.c1_ = c1 * inv;
    s.c2_ = c2 * inv;
    s.psi1_ = std::move(psi1);
    s.psi2_ = std::move(psi2);
    s.xi1_ = std::move(xi1);
    s.xi2_ = std::move(xi2);
    return s;
}

namespace {

std::vector<double> branch_outcome_distribution(std::complex<double> c1, std::complex<double> c2,
                                                const Cvec& v1, const Cvec& v2,
                                                std::complex<double> other_overlap,
                                                const std::vector<Cvec>& basis) {
    if (!linalg::is_orthonormal_basis(basis, v1.size()))
        throw ContractViolation("outcome distribution: basis is not orthonormal and complete");
    std::vector<double> prob(basis.size());
    double total = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const std::complex<double> a1 = linalg::dot(basis[a], v1);
        const std::complex<double> a2 = linalg::dot(basis[a], v2);
        double p = std::norm(c1 * a1) + std::norm(c2 * a2) +
                   2.0 * std::real(std::conj(c1 * a1) * (c2 * a2) * other_overlap);
        if (p < 0.0) p = 0.0; // rounding dust on near-orthogonal branches
        prob[a] = p;
        total += p;
    }
    for (double& p : prob) p /= total;
    return prob;
}

} // namespace

std::vector<double> object_outcome_distribution(const TwoBranchState& s,
                                                const std::vector<Cvec>& basis) {
    return branch_outcome_distribution(s.c1(), s.c2(), s.psi1(), s.psi2(), s.meter_overlap(),
                                       basis);
}

std::vector<double> meter_outcome_distribution(const TwoBranchState& s,
                                               const std::vector<Cvec>& basis) {
    return branch_outcome_distribution(s.c1(), s.c2(), s.xi1(), s.xi2(), s.object_overlap(),
                                       basis);
}

Cvec post_measurement_state(const TwoBranchState& s, const std::vector<Cvec>& meter_basis,
                            std::size_t m) {
    if (m >= meter_basis.size())
        throw ContractViolation("post_measurement_state: outcome index out of range");
    if (!linalg::is_orthonormal_basis(meter_basis, s.meter_dim()))
        throw ContractViolation("post_measurement_state: basis is not orthonormal and complete");

    const std::complex<double> m1 = linalg::dot(meter_basis[m], s.xi1());
    const std::complex<double> m2 = linalg::dot(meter_basis[m], s.xi2());

    Cvec out(s.object_dim());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = s.c1() * m1 * s.psi1()[i] + s.c2() * m2 * s.psi2()[i];

    const double n2 = std::real(linalg::dot(out, out));
    if (n2 < 1e-14) throw NumericalError("outcome unreachable: probability below 1e-14");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : out) v *= inv;
    return out;
}

DisturbanceReport disturbance_report(const TwoBranchState& s, const std::vector<Cvec>& meter_basis,
                                     std::size_t m, const std::vector<Cvec>& object_basis) {
    DisturbanceReport report;
    report.before = object_outcome_distribution(s, object_basis);

    const Cvec post = post_measurement_state(s, meter_basis, m);
    report.after.resize(object_basis.size());
    for (std::size_t a = 0; a < object_basis.size(); ++a)
        report.after[a] = std::norm(linalg::dot(object_basis[a], post));

    double tv = 0.0;
    for (std::size_t a = 0; a < object_basis.size(); ++a)
        tv += std::abs(report.before[a] - report.after[a]);
    report.total_variation = 0.5 * tv;
    return report;
}

TwoBranchState link_to_slit_model(const BranchPair& branches) {
    const auto embed = [](const WaveFunction& w) {
        const double scale = std::sqrt(w.step());
        Cvec v(w.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = w.amplitudes()[i] * scale;
        return v;
    };

    const double n1 = branches.slit1.particle.norm();
    const double n2 = branches.slit2.particle.norm();
    if (!(n1 > 0.0) || !(n2 > 0.0))
        throw ContractViolation("link_to_slit_model: a branch has no amplitude");

    Cvec psi1 = embed(branches.slit1.particle);
    Cvec psi2 = embed(branches.slit2.particle);
    for (auto& v : psi1) v /= n1;
    for (auto& v : psi2) v /= n2;

    return TwoBranchState::make(n1, n2, std::move(psi1), std::move(psi2),
                                embed(branches.slit1.wall), embed(branches.slit2.wall));
}

} // namespace qslit
