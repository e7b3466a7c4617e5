#include "tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace qslit::oracle {

namespace {

std::complex<double> inner(const Cvec& a, const Cvec& b) {
    std::complex<double> acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

} // namespace

Cvec dense_two_branch(std::complex<double> c1, std::complex<double> c2, const Cvec& psi1,
                      const Cvec& psi2, const Cvec& xi1, const Cvec& xi2) {
    const std::size_t dh = psi1.size();
    const std::size_t dk = xi1.size();
    Cvec state(dh * dk);
    for (std::size_t i = 0; i < dh; ++i)
        for (std::size_t j = 0; j < dk; ++j)
            state[i * dk + j] = c1 * psi1[i] * xi1[j] + c2 * psi2[i] * xi2[j];
    double n2 = 0.0;
    for (const auto& v : state) n2 += std::norm(v);
    if (!(n2 > 0.0)) throw std::runtime_error("dense_two_branch: zero state");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : state) v *= inv;
    return state;
}

std::vector<double> dense_object_distribution(const Cvec& state, const std::vector<Cvec>& basis,
                                              std::size_t meter_dim) {
    const std::size_t dh = state.size() / meter_dim;
    std::vector<double> prob(basis.size(), 0.0);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t j = 0; j < meter_dim; ++j) {
            // <a (x) e_j | state> = sum_i conj(a_i) state[i * dk + j]
            std::complex<double> amp{};
            for (std::size_t i = 0; i < dh; ++i) amp += std::conj(basis[a][i]) * state[i * meter_dim + j];
            prob[a] += std::norm(amp);
        }
    }
    double total = 0.0;
    for (double p : prob) total += p;
    for (double& p : prob) p /= total;
    return prob;
}

std::vector<double> dense_meter_distribution(const Cvec& state, const std::vector<Cvec>& basis,
                                             std::size_t object_dim) {
    const std::size_t dk = state.size() / object_dim;
    std::vector<double> prob(basis.size(), 0.0);
    for (std::size_t m = 0; m < basis.size(); ++m) {
        for (std::size_t i = 0; i < object_dim; ++i) {
            std::complex<double> amp{};
            for (std::size_t j = 0; j < dk; ++j) amp += std::conj(basis[m][j]) * state[i * dk + j];
            prob[m] += std::norm(amp);
        }
    }
    double total = 0.0;
    for (double p : prob) total += p;
    for (double& p : prob) p /= total;
    return prob;
}

Cvec dense_post_measurement(const Cvec& state, const std::vector<Cvec>& meter_basis,
                            std::size_t m, std::size_t object_dim) {
    const std::size_t dk = state.size() / object_dim;
    Cvec post(object_dim);
    for (std::size_t i = 0; i < object_dim; ++i) {
        std::complex<double> amp{};
        for (std::size_t j = 0; j < dk; ++j) amp += std::conj(meter_basis[m][j]) * state[i * dk + j];
        post[i] = amp;
    }
    const double n2 = std::real(inner(post, post));
    if (n2 < 1e-14) throw std::runtime_error("dense_post_measurement: outcome unreachable");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : post) v *= inv;
    return post;
}

} // namespace qslit::oracle
