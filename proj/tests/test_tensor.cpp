#include <doctest.h>

#include <cmath>
#include <vector>

#include "ccr/random.hpp"
#include "ccr/tensor.hpp"
#include "support.hpp"

using namespace ccr;
using ccr::test::check_matrix;
using ccr::test::check_near;
using ccr::test::check_throws_kind;

namespace {

const Complex I{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector bell() { return StateVector({2, 2}, {kInvSqrt2, 0.0, 0.0, kInvSqrt2}); }

}  // namespace

TEST_CASE("kron of identities is the identity") {
    CHECK(kron(pauli::identity(), pauli::identity()) == ComplexMatrix::identity(4));
}

TEST_CASE("kron of sigma_z with itself is diagonal") {
    const std::vector<Complex> d{1.0, -1.0, -1.0, 1.0};
    CHECK(kron(pauli::z(), pauli::z()) == ComplexMatrix::diagonal(d));
}

TEST_CASE("kron of sigma_x and sigma_y matches the hand expansion") {
    const ComplexMatrix want{{0.0, 0.0, 0.0, -I}, {0.0, 0.0, I, 0.0}, {0.0, -I, 0.0, 0.0}, {I, 0.0, 0.0, 0.0}};
    CHECK(kron(pauli::x(), pauli::y()) == want);
}

TEST_CASE("kron of rectangular factors follows the block definition") {
    const ComplexMatrix a{{1.0, 2.0}};
    const ComplexMatrix b{{1.0}, {I}};
    const ComplexMatrix want{{1.0, 2.0}, {I, 2.0 * I}};
    CHECK(kron(a, b) == want);
}

TEST_CASE("dagger") {
    CHECK(dagger(pauli::identity()) == pauli::identity());
    CHECK(dagger(pauli::y()) == pauli::y());
    const ComplexMatrix a{{1.0, I}, {2.0, 3.0 - I}};
    const ComplexMatrix want{{1.0, 2.0}, {-I, 3.0 + I}};
    CHECK(dagger(a) == want);
}

TEST_CASE("outer products of basic states") {
    SUBCASE("basis projector") {
        const DensityMatrix rho = outer(StateVector({2}, {1.0, 0.0}));
        const std::vector<Complex> d{1.0, 0.0};
        CHECK(rho.matrix() == ComplexMatrix::diagonal(d));
    }
    SUBCASE("plus state") {
        const DensityMatrix rho = outer(StateVector({2}, {kInvSqrt2, kInvSqrt2}));
        check_matrix(rho.matrix(), {{0.5, 0.5}, {0.5, 0.5}}, 1e-15);
    }
    SUBCASE("Bell state has four corner entries of one half") {
        const DensityMatrix rho = outer(bell());
        ComplexMatrix want(4, 4);
        want(0, 0) = want(0, 3) = want(3, 0) = want(3, 3) = 0.5;
        check_matrix(rho.matrix(), want, 1e-15);
    }
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    const DensityMatrix reduced = partial_trace(outer(bell()), {0});
    check_matrix(reduced.matrix(), 0.5 * pauli::identity(), 1e-15);
    CHECK(reduced.dims() == std::vector<std::size_t>{2});
}

TEST_CASE("partial trace of a product recovers each factor") {
    Rng rng(7);
    const auto a = random_state(rng, {2});
    const auto b = random_state(rng, {3});
    std::vector<Complex> amps;
    for (auto x : a.amplitudes())
        for (auto y : b.amplitudes()) amps.push_back(x * y);
    const DensityMatrix rho = outer(StateVector({2, 3}, amps));
    check_matrix(partial_trace(rho, {0}).matrix(), outer(a).matrix(), 1e-15);
    check_matrix(partial_trace(rho, {1}).matrix(), outer(b).matrix(), 1e-15);
}

TEST_CASE("partial trace keeps factors in their original order") {
    Rng rng(11);
    const auto a = random_state(rng, {2});
    const auto b = random_state(rng, {3});
    const auto c = random_state(rng, {2});
    std::vector<Complex> amps;
    for (auto x : a.amplitudes())
        for (auto y : b.amplitudes())
            for (auto z : c.amplitudes()) amps.push_back(x * y * z);
    const DensityMatrix rho = outer(StateVector({2, 3, 2}, amps));
    const std::vector<std::size_t> keep{2, 0};
    const DensityMatrix ac = partial_trace(rho, keep);
    CHECK(ac.dims() == std::vector<std::size_t>{2, 2});
    check_matrix(ac.matrix(), kron(outer(a).matrix(), outer(c).matrix()), 1e-15);
}

TEST_CASE("partial trace over every factor kept is exact") {
    Rng rng(3);
    const DensityMatrix rho = outer(random_state(rng, {2, 2, 2}));
    CHECK(partial_trace(rho, {0, 1, 2}).matrix() == rho.matrix());
}

TEST_CASE("partial trace rejects bad keep sets") {
    const DensityMatrix rho = outer(bell());
    check_throws_kind([&] { partial_trace(rho, {}); }, ErrorKind::BadSubsystemIndex);
    check_throws_kind([&] { partial_trace(rho, {0, 0}); }, ErrorKind::BadSubsystemIndex);
    check_throws_kind([&] { partial_trace(rho, {2}); }, ErrorKind::BadSubsystemIndex);
}

TEST_CASE("purity") {
    check_near(purity(DensityMatrix({2}, 0.5 * pauli::identity())), 0.5, 1e-15);
    check_near(purity(outer(bell())), 1.0, 1e-15);
    const std::vector<Complex> d{0.75, 0.25};
    check_near(purity(DensityMatrix({2}, ComplexMatrix::diagonal(d))), 0.625, 1e-15);
}

TEST_CASE("matmul and apply") {
    const StateVector zero({2}, {1.0, 0.0});
    const StateVector flipped = apply(pauli::x(), zero);
    CHECK(flipped[0] == Complex(0.0));
    CHECK(flipped[1] == Complex(1.0));

    const StateVector same = apply(ComplexMatrix::identity(4), bell());
    for (std::size_t i = 0; i < 4; ++i) CHECK(same[i] == bell()[i]);

    CHECK(matmul(pauli::x(), pauli::y()) == I * pauli::z());
}

TEST_CASE("apply rejects non-unitary operators and shape mismatches") {
    const StateVector zero({2}, {1.0, 0.0});
    check_throws_kind([&] { apply(2.0 * pauli::identity(), zero); }, ErrorKind::NormNotPreserved);
    check_throws_kind([&] { apply(ComplexMatrix::identity(4), zero); }, ErrorKind::DimensionMismatch);
}

TEST_CASE("controlled operation touches only the selected block") {
    // control on factor 0, target factor 1: a CNOT
    const StateVector plus_zero({2, 2}, {kInvSqrt2, 0.0, kInvSqrt2, 0.0});
    const StateVector out = apply_controlled(plus_zero, 0, 1, 1, pauli::x());
    for (std::size_t i = 0; i < 4; ++i) check_near(out[i], bell()[i], 1e-15);
}

TEST_CASE("state and density matrix invariants are enforced") {
    check_throws_kind([] { StateVector({2}, {1.0, 1.0}); }, ErrorKind::NotNormalized);
    check_throws_kind([] { StateVector({2, 2}, {1.0, 0.0}); }, ErrorKind::DimensionMismatch);
    check_throws_kind([] { StateVector::normalized({2}, {0.0, 0.0}); }, ErrorKind::NotNormalized);
    check_throws_kind([] { StateVector({2}, {std::nan(""), 0.0}); }, ErrorKind::NonFinite);
    check_throws_kind([] { DensityMatrix({2}, ComplexMatrix{{0.5, I}, {I, 0.5}}); }, ErrorKind::NotHermitian);
    check_throws_kind([] { DensityMatrix({2}, ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}}); }, ErrorKind::NotNormalized);
    check_throws_kind([] { DensityMatrix({2}, ComplexMatrix{{1.0, 1.0}, {1.0, 0.0}}); }, ErrorKind::NotNormalized);
}

TEST_CASE("normalized rescales to unit norm") {
    const StateVector psi = StateVector::normalized({2}, {3.0, 4.0 * I});
    check_near(psi.norm(), 1.0, 1e-15);
    check_near(psi[1], 0.8 * I, 1e-15);
}

TEST_CASE("kron is associative on random matrices") {
    Rng rng(5);
    for (int n = 0; n < 20; ++n) {
        const auto a = random_matrix(rng, 2, 3);
        const auto b = random_matrix(rng, 2, 2);
        const auto c = random_matrix(rng, 3, 1);
        CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-15);
    }
}
