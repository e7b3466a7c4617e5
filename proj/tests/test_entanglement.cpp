#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "oracle/tensor.hpp"
#include "qslit/entanglement.hpp"
#include "qslit/errors.hpp"
#include "qslit/observables.hpp"

using namespace qslit;
using namespace qslit::testing;

namespace {

TwoBranchState random_state(std::size_t object_dim, std::size_t meter_dim, Rng& rng) {
    const cplx c1(0.4 + rng.uniform(), rng.uniform() - 0.5);
    const cplx c2(0.4 + rng.uniform(), rng.uniform() - 0.5);
    return TwoBranchState::make(c1, c2, random_unit_vector(object_dim, rng),
                                random_unit_vector(object_dim, rng),
                                random_unit_vector(meter_dim, rng),
                                random_unit_vector(meter_dim, rng));
}

double total_norm_squared(const TwoBranchState& s) {
    return std::norm(s.c1()) + std::norm(s.c2()) +
           2.0 * std::real(std::conj(s.c1()) * s.c2() * s.object_overlap() * s.meter_overlap());
}

} // namespace

TEST_CASE("construction normalizes the total state") {
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const TwoBranchState s = random_state(2 + trial % 7, 2 + (trial / 2) % 7, rng);
        CHECK(std::abs(total_norm_squared(s) - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(TwoBranchState::make(1.0, 1.0, {1.0}, {1.0}, {1.0, 0.0}, {1.0, 0.0}),
                    ContractViolation);
}

TEST_CASE("orthogonal meter states remove the interference term") {
    Rng rng(7);
    const std::size_t dim = 4;
    const Cvec psi1 = random_unit_vector(dim, rng);
    const Cvec psi2 = random_unit_vector(dim, rng);
    const auto meter = computational_basis(2);
    const TwoBranchState s =
        TwoBranchState::make(cplx(0.8, 0.1), cplx(0.55, -0.2), psi1, psi2, meter[0], meter[1]);

    const auto basis = random_basis(dim, rng);
    const auto dist = object_outcome_distribution(s, basis);

    double total = 0.0;
    for (double p : dist) total += p;
    CHECK(std::abs(total - 1.0) < 1e-12);

    // classical mixture of the two branches
    for (std::size_t a = 0; a < dim; ++a) {
        const double mix = std::norm(s.c1() * linalg::dot(basis[a], psi1)) +
                           std::norm(s.c2() * linalg::dot(basis[a], psi2));
        CHECK(std::abs(dist[a] - mix) < 1e-12);
    }
}

TEST_CASE("identical meter states leave full interference") {
    Rng rng(9);
    const std::size_t dim = 3;
    const Cvec xi = random_unit_vector(dim, rng);
    const TwoBranchState s =
        TwoBranchState::make(1.0, 1.0, random_unit_vector(dim, rng),
                             random_unit_vector(dim, rng), xi, xi);
    CHECK(std::abs(s.meter_overlap() - cplx(1.0)) < 1e-12);

    // distribution equals that of the pure superposition c1 psi1 + c2 psi2
    Cvec combined(dim);
    for (std::size_t i = 0; i < dim; ++i)
        combined[i] = s.c1() * s.psi1()[i] + s.c2() * s.psi2()[i];
    combined = linalg::normalized(std::move(combined));

    const auto basis = random_basis(dim, rng);
    const auto dist = object_outcome_distribution(s, basis);
    for (std::size_t a = 0; a < dim; ++a)
        CHECK(std::abs(dist[a] - std::norm(linalg::dot(basis[a], combined))) < 1e-12);
}

TEST_CASE("object and meter distributions match the dense oracle") {
    Rng rng(13);
    for (const auto& [dh, dk] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 2}, {3, 3}, {8, 8}, {4, 6}}) {
        const TwoBranchState s = random_state(dh, dk, rng);
        const Cvec dense = oracle::dense_two_branch(s.c1(), s.c2(), s.psi1(), s.psi2(), s.xi1(),
                                                    s.xi2());

        const auto obj_basis = random_basis(dh, rng);
        const auto obj = object_outcome_distribution(s, obj_basis);
        const auto obj_oracle = oracle::dense_object_distribution(dense, obj_basis, dk);
        for (std::size_t a = 0; a < dh; ++a) CHECK(std::abs(obj[a] - obj_oracle[a]) < 1e-12);

        const auto met_basis = random_basis(dk, rng);
        const auto met = meter_outcome_distribution(s, met_basis);
        const auto met_oracle = oracle::dense_meter_distribution(dense, met_basis, dh);
        for (std::size_t m = 0; m < dk; ++m) CHECK(std::abs(met[m] - met_oracle[m]) < 1e-12);
    }
}

TEST_CASE("role swap exchanges the two distribution formulas") {
    Rng rng(17);
    const TwoBranchState s = random_state(5, 5, rng);
    const TwoBranchState swapped =
        TwoBranchState::make(s.c1(), s.c2(), s.xi1(), s.xi2(), s.psi1(), s.psi2());

    const auto basis = random_basis(5, rng);
    const auto meter_view = meter_outcome_distribution(s, basis);
    const auto object_view = object_outcome_distribution(swapped, basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
        CHECK(std::abs(meter_view[i] - object_view[i]) < 1e-12);
}

TEST_CASE("orthogonal meter outcome identifies the branch with certainty") {
    Rng rng(19);
    const std::size_t dim = 4;
    Cvec xi1 = random_unit_vector(dim, rng);
    Cvec xi2 = random_unit_vector(dim, rng);
    // orthogonalize xi2 against xi1
    const cplx proj = linalg::dot(xi1, xi2);
    for (std::size_t i = 0; i < dim; ++i) xi2[i] -= proj * xi1[i];
    xi2 = linalg::normalized(std::move(xi2));

    std::vector<Cvec> meter_basis{xi1, xi2};
    // complete with Gram-Schmidt
    while (meter_basis.size() < dim) {
        Cvec v = random_unit_vector(dim, rng);
        for (const Cvec& u : meter_basis) {
            const cplx p = linalg::dot(u, v);
            for (std::size_t i = 0; i < dim; ++i) v[i] -= p * u[i];
        }
        if (linalg::norm(v) > 1e-3) meter_basis.push_back(linalg::normalized(std::move(v)));
    }

    const Cvec psi1 = random_unit_vector(3, rng);
    const Cvec psi2 = random_unit_vector(3, rng);
    const TwoBranchState s = TwoBranchState::make(cplx(0.7, 0.0), cplx(0.6, 0.3), psi1, psi2,
                                                  xi1, xi2);

    const auto dist = meter_outcome_distribution(s, meter_basis);
    CHECK(std::abs(dist[0] - std::norm(s.c1())) < 1e-12);
    CHECK(std::abs(dist[1] - std::norm(s.c2())) < 1e-12);
    for (std::size_t m = 2; m < dim; ++m) CHECK(dist[m] < 1e-12);

    // projective collapse: outcome 0 leaves psi1 (up to phase)
    const Cvec post = post_measurement_state(s, meter_basis, 0);
    CHECK(std::abs(std::abs(linalg::dot(post, psi1)) - 1.0) < 1e-12);
}

TEST_CASE("factored meters cause no disturbance") {
    Rng rng(23);
    const std::size_t dim = 3;
    const Cvec xi = random_unit_vector(dim, rng);
    const TwoBranchState s =
        TwoBranchState::make(cplx(0.8, 0.0), cplx(0.5, 0.2), random_unit_vector(dim, rng),
                             random_unit_vector(dim, rng), xi, xi);

    const auto meter_basis = random_basis(dim, rng);
    const auto object_basis = random_basis(dim, rng);

    Cvec combined(dim);
    for (std::size_t i = 0; i < dim; ++i)
        combined[i] = s.c1() * s.psi1()[i] + s.c2() * s.psi2()[i];
    combined = linalg::normalized(std::move(combined));

    for (std::size_t m = 0; m < dim; ++m) {
        if (std::norm(linalg::dot(meter_basis[m], xi)) < 1e-10) continue; // unreachable outcome
        const Cvec post = post_measurement_state(s, meter_basis, m);
        CHECK(std::abs(std::abs(linalg::dot(post, combined)) - 1.0) < 1e-12);
        const DisturbanceReport r = disturbance_report(s, meter_basis, m, object_basis);
        CHECK(r.total_variation < 1e-12);
    }
}

TEST_CASE("post-measurement states match the dense oracle") {
    Rng rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const TwoBranchState s = random_state(2 + trial % 4, 2 + trial % 3, rng);
        const Cvec dense = oracle::dense_two_branch(s.c1(), s.c2(), s.psi1(), s.psi2(), s.xi1(),
                                                    s.xi2());
        const auto meter_basis = random_basis(s.meter_dim(), rng);
        const auto probs = meter_outcome_distribution(s, meter_basis);
        for (std::size_t m = 0; m < meter_basis.size(); ++m) {
            if (probs[m] < 1e-10) continue;
            const Cvec post = post_measurement_state(s, meter_basis, m);
            const Cvec want = oracle::dense_post_measurement(dense, meter_basis, m,
                                                             s.object_dim());
            CHECK(std::abs(std::abs(linalg::dot(post, want)) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("disturbance respects the law of total probability") {
    Rng rng(31);
    const TwoBranchState s = random_state(4, 4, rng);
    const auto meter_basis = random_basis(4, rng);
    const auto object_basis = random_basis(4, rng);

    const auto unconditional = object_outcome_distribution(s, object_basis);
    const auto meter_probs = meter_outcome_distribution(s, meter_basis);

    std::vector<double> reassembled(4, 0.0);
    for (std::size_t m = 0; m < 4; ++m) {
        const DisturbanceReport r = disturbance_report(s, meter_basis, m, object_basis);
        for (std::size_t b = 0; b < 4; ++b) reassembled[b] += meter_probs[m] * r.after[b];
    }
    for (std::size_t b = 0; b < 4; ++b) CHECK(std::abs(reassembled[b] - unconditional[b]) < 1e-12);
}

TEST_CASE("generic meters disturb a test observable") {
    Rng rng(37);
    const TwoBranchState s = random_state(4, 4, rng);
    const auto meter_basis = random_basis(4, rng);
    const auto object_basis = random_basis(4, rng);
    const DisturbanceReport r = disturbance_report(s, meter_basis, 0, object_basis);
    CHECK(r.total_variation > 1e-6);
    CHECK(r.total_variation <= 1.0 + 1e-12);
}

TEST_CASE("robertson inequality on random hermitian pairs") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + trial % 7;
        const Cvec state = random_unit_vector(dim, rng);
        const Cmat a = random_hermitian(dim, rng);
        const Cmat b = random_hermitian(dim, rng);

        const double ea = std::real(linalg::expectation(a, state));
        const double eb = std::real(linalg::expectation(b, state));
        const Cvec av = linalg::matvec(a, state);
        const Cvec bv = linalg::matvec(b, state);
        const double va = std::real(linalg::dot(av, av)) - ea * ea;
        const double vb = std::real(linalg::dot(bv, bv)) - eb * eb;
        const cplx comm = linalg::dot(av, bv) - linalg::dot(bv, av); // <[A,B]>
        const double lhs = std::sqrt(std::max(va, 0.0)) * std::sqrt(std::max(vb, 0.0));
        REQUIRE(lhs >= 0.5 * std::abs(comm) - 1e-10);
    }
}

TEST_CASE("invalid bases and outcomes are rejected") {
    Rng rng(43);
    const TwoBranchState s = random_state(3, 3, rng);
    std::vector<Cvec> bad = computational_basis(3);
    bad[1][1] = 2.0; // not unit length
    CHECK_THROWS_AS((void)object_outcome_distribution(s, bad), ContractViolation);
    CHECK_THROWS_AS((void)post_measurement_state(s, computational_basis(3), 7),
                    ContractViolation);
}

TEST_CASE("grid model projects onto the two-branch abstraction") {
    ScenarioConfig config;
    config.grid = unit_kick_grid(16, 2048);
    config.particle.kind = StateKind::GaussianPosition;
    config.particle.width = 3.0;
    config.wall.kind = StateKind::GaussianPosition;
    config.wall.width = 1.0;
    config.kick = 1.0;
    config.tau = 0.4;
    config.tau_prime = 2.0;
    config.slit.mode = SlitMode::Partition;

    SUBCASE("gaussian wall reproduces the grid visibility") {
        const BranchPair b = run_pipeline(config);
        const TwoBranchState s = link_to_slit_model(b);
        const double grid_v =
            visibility(build_state(config.wall, config.grid), config.kick).visibility;
        CHECK(std::abs(std::abs(s.meter_overlap()) - grid_v) < 1e-9);
        CHECK(std::abs(std::abs(s.meter_overlap()) - std::exp(-2.0)) < 1e-6);
        CHECK(std::abs(total_norm_squared(s) - 1.0) < 1e-9);
    }

    SUBCASE("zero kick gives unit meter overlap") {
        config.kick = 0.0;
        const TwoBranchState s = link_to_slit_model(run_pipeline(config));
        CHECK(std::abs(s.meter_overlap() - cplx(1.0)) < 1e-12);
    }

    SUBCASE("disjoint momentum supports give zero meter overlap") {
        config.grid = unit_kick_grid(32, 4096);
        config.wall.kind = StateKind::TopHatMomentum;
        config.wall.center = 0.0;
        config.wall.width = 1.9;
        const TwoBranchState s = link_to_slit_model(run_pipeline(config));
        CHECK(std::abs(s.meter_overlap()) == 0.0);
    }
}
