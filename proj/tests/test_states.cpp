#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ccr/measures.hpp"
#include "ccr/random.hpp"
#include "ccr/scenarios.hpp"
#include "support.hpp"

using namespace ccr;
using ccr::test::check_matrix;
using ccr::test::check_near;
using ccr::test::check_throws_kind;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_triple(const MultipartiteState& s, std::size_t factor, double p, double c, double e) {
    CAPTURE(factor);
    const auto t = ccr::ccr(s, factor);
    check_near(t.predictability, p, 1e-12);
    check_near(t.coherence, c, 1e-12);
    check_near(t.entropy, e, 1e-12);
    CHECK(t.residual <= 1e-12);
}

}  // namespace

TEST_CASE("boost direction") {
    CHECK(boost_direction(0.0) == kUnitX);
    const Vec3 z = boost_direction(kHalfPi);
    check_near(z.x, 0.0, 1e-16);
    check_near(z.z, 1.0, 0.0);
    const Vec3 diag = boost_direction(std::numbers::pi / 4.0);
    check_near(diag.x, std::sqrt(2.0) / 2.0, 1e-15);
    check_near(diag.z, std::sqrt(2.0) / 2.0, 1e-15);
    check_near(norm(diag), 1.0, 1e-15);
    CHECK_NOTHROW(boost_direction(1.5708));
    check_throws_kind([] { boost_direction(-0.01); }, ErrorKind::ThetaOutOfRange);
    check_throws_kind([] { boost_direction(1.6); }, ErrorKind::ThetaOutOfRange);
}

TEST_CASE("subsystem index") {
    CHECK(subsystem_index(0, Dof::momentum, 2) == 0);
    CHECK(subsystem_index(0, Dof::spin, 2) == 1);
    CHECK(subsystem_index(1, Dof::spin, 2) == 3);
    check_throws_kind([] { subsystem_index(2, Dof::spin, 2); }, ErrorKind::BadSubsystemIndex);
}

TEST_CASE("scenario parsing") {
    for (auto id : kAllScenarios) CHECK(parse_scenario(to_string(id)) == id);
    CHECK_FALSE(parse_scenario("omega").has_value());
}

TEST_CASE("scenario momenta") {
    const auto s = make_scenario(ScenarioId::xi2, 2.0, 1.5);
    REQUIRE(s.particle_count() == 2);
    for (const auto& particle : s.particles()) {
        REQUIRE(particle.modes.size() == 2);
        CHECK(particle.modes[0].token == "+p");
        CHECK(particle.modes[1].token == "-p");
        CHECK(particle.modes[0].momentum.spatial() == Vec3{0.0, 2.0, 0.0});
        CHECK(particle.modes[1].momentum.spatial() == Vec3{0.0, -2.0, 0.0});
        check_near(particle.modes[0].momentum.e(), 2.5, 1e-15);
        CHECK(particle.modes[0].momentum.mass() == 1.5);
    }
    check_throws_kind([] { make_scenario(ScenarioId::psi, 0.0, 1.0); }, ErrorKind::BadPhysicalParams);
    check_throws_kind([] { make_scenario(ScenarioId::psi, 1.0, -1.0); }, ErrorKind::BadPhysicalParams);
}

TEST_CASE("scenario amplitudes") {
    const double h = 1.0 / std::sqrt(2.0);
    SUBCASE("psi") {
        const auto state = make_scenario(ScenarioId::psi);
        const auto& a = state.amplitudes();
        CHECK(a.dims() == std::vector<std::size_t>{2, 2});
        check_near(a[0], h, 1e-16);
        check_near(a[2], h, 1e-16);
    }
    SUBCASE("xi") {
        const auto state = make_scenario(ScenarioId::xi);
        const auto& a = state.amplitudes();
        check_near(a[0], h, 1e-16);
        check_near(a[3], h, 1e-16);
    }
    SUBCASE("phi") {
        const auto state = make_scenario(ScenarioId::phi);
        const auto& a = state.amplitudes();
        for (std::size_t i = 0; i < 4; ++i) check_near(a[i], 0.5, 1e-16);
    }
    SUBCASE("xi2: (|p,-p> + |-p,p>) |0,0>") {
        const auto state = make_scenario(ScenarioId::xi2);
        const auto& a = state.amplitudes();
        CHECK(a.dims() == std::vector<std::size_t>{2, 2, 2, 2});
        // flat index over (p_A, s_A, p_B, s_B)
        check_near(a[0b0010], h, 1e-16);
        check_near(a[0b1000], h, 1e-16);
    }
    SUBCASE("upsilon: |p,-p>|0,1> + |-p,p>|1,0>") {
        const auto state = make_scenario(ScenarioId::upsilon);
        const auto& a = state.amplitudes();
        check_near(a[0b0011], h, 1e-16);
        check_near(a[0b1100], h, 1e-16);
    }
}

TEST_CASE("initial complementarity of each scenario") {
    const auto psi = make_scenario(ScenarioId::psi);
    check_triple(psi, 1, 0.5, 0.0, 0.0);
    check_triple(psi, 0, 0.0, 0.5, 0.0);

    const auto xi = make_scenario(ScenarioId::xi);
    for (std::size_t f : {0u, 1u}) {
        check_matrix(partial_trace(outer(xi.amplitudes()), {f}).matrix(), 0.5 * pauli::identity(), 1e-15);
        check_triple(xi, f, 0.0, 0.0, 0.5);
    }

    const auto phi = make_scenario(ScenarioId::phi);
    for (std::size_t f : {0u, 1u}) check_triple(phi, f, 0.0, 0.5, 0.0);

    const auto xi2 = make_scenario(ScenarioId::xi2);
    for (std::size_t k : {0u, 1u}) {
        check_triple(xi2, xi2.subsystem_index(k, Dof::momentum), 0.0, 0.0, 0.5);
        check_triple(xi2, xi2.subsystem_index(k, Dof::spin), 0.5, 0.0, 0.0);
    }

    const auto upsilon = make_scenario(ScenarioId::upsilon);
    for (std::size_t f = 0; f < 4; ++f)
        check_matrix(partial_trace(outer(upsilon.amplitudes()), {f}).matrix(), 0.5 * pauli::identity(), 1e-15);
}

TEST_CASE("product states") {
    const auto k = FourMomentum::from_mass(1.0, {0.0, 0.0, 1.0});
    SUBCASE("single momentum, spin up") {
        const ParticleSpec spec{{{"k", k}}, {1.0}, {1.0, 0.0}};
        const auto s = make_product_state(std::span(&spec, 1));
        CHECK(s.amplitudes().dims() == std::vector<std::size_t>{1, 2});
        CHECK(s.amplitudes()[0] == Complex(1.0));
        CHECK(s.amplitudes()[1] == Complex(0.0));
    }
    SUBCASE("single momentum, spin plus") {
        const double h = 1.0 / std::sqrt(2.0);
        const ParticleSpec spec{{{"k", k}}, {1.0}, {h, h}};
        const auto s = make_product_state(std::span(&spec, 1));
        check_near(linear_entropy(partial_trace(outer(s.amplitudes()), {0})), 0.0, 1e-15);
        check_near(linear_entropy(partial_trace(outer(s.amplitudes()), {1})), 0.0, 1e-15);
    }
    SUBCASE("two particles with random spins are pure in every reduction") {
        Rng rng(31);
        std::vector<ParticleSpec> specs;
        for (int n = 0; n < 2; ++n) {
            const auto spin = random_state(rng, {2});
            specs.push_back({{{"k", random_momentum(rng, 2.0)}}, {1.0}, {spin[0], spin[1]}});
        }
        const auto s = make_product_state(specs);
        CHECK(s.factor_count() == 4);
        for (std::size_t f = 0; f < 4; ++f) check_near(purity(partial_trace(outer(s.amplitudes()), {f})), 1.0, 1e-12);
    }
    SUBCASE("amplitudes must be normalized") {
        const ParticleSpec bad_spin{{{"k", k}}, {1.0}, {1.0, 1.0}};
        check_throws_kind([&] { make_product_state(std::span(&bad_spin, 1)); }, ErrorKind::NotNormalized);
        const ParticleSpec bad_momentum{{{"k", k}}, {0.5}, {1.0, 0.0}};
        check_throws_kind([&] { make_product_state(std::span(&bad_momentum, 1)); }, ErrorKind::NotNormalized);
    }
}

TEST_CASE("multipartite labels must be distinct") {
    const auto a = FourMomentum::from_mass(1.0, {0.0, 1.0, 0.0});
    const auto b = FourMomentum::from_mass(1.0, {0.0, -1.0, 0.0});
    const StateVector amps({2, 2}, {1.0, 0.0, 0.0, 0.0});
    check_throws_kind([&] { MultipartiteState({Particle{{{"x", a}, {"x", b}}}}, amps); }, ErrorKind::LabelCollision);
    check_throws_kind([&] { MultipartiteState({Particle{{{"x", a}, {"y", a}}}}, amps); }, ErrorKind::LabelCollision);
    check_throws_kind([&] { MultipartiteState({Particle{{{"x", a}}}}, amps); }, ErrorKind::DimensionMismatch);
    const MultipartiteState ok({Particle{{{"x", a}, {"y", b}}}}, amps);
    CHECK(ok.basis_label(0, 1) == "y");
    CHECK(ok.basis_label(1, 1) == "1");
    check_throws_kind([&] { (void)ok.basis_label(2, 0); }, ErrorKind::BadSubsystemIndex);
}
