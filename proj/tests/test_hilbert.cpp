// Copyright 2026 The tracebox authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tracebox/hilbert.hpp"

using namespace tracebox;

namespace {

ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

HermitianOperator op2(const ComplexMatrix& m) { return HermitianOperator({2}, m); }

}  // namespace

TEST_CASE("kron basics") {
    const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
    CHECK((kron(i2, i2) - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

    ComplexMatrix d10(2, 2), d01(2, 2);
    d10 << 1, 0, 0, 0;
    d01 << 0, 0, 0, 1;
    ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
    expect(1, 1) = 1.0;
    CHECK((kron(d10, d01) - expect).cwiseAbs().maxCoeff() == 0.0);

    ComplexVector v00(4);
    v00 << 1, 0, 0, 0;
    ComplexVector v11(4);
    v11 << 0, 0, 0, 1;
    CHECK((kron(sigma_x(), sigma_x()) * v00 - v11).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kron is associative and multiplicative on traces") {
    auto rng = seeded_rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix a = gaussian_matrix(2, 2, rng);
        const ComplexMatrix b = gaussian_matrix(3, 3, rng);
        const ComplexMatrix c = gaussian_matrix(2, 2, rng);
        CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() <
              1e-12);
        CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("hs_inner on Pauli operators") {
    const auto id = HermitianOperator::identity({2});
    CHECK(hs_inner(id, id) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(hs_inner(op2(sigma_z()), op2(sigma_z())) == doctest::Approx(2.0));
    CHECK(hs_inner(op2(sigma_z()), op2(sigma_x())) == doctest::Approx(0.0));
    CHECK_THROWS_AS(hs_inner(id, HermitianOperator::identity({3})),
                    DimensionMismatch);
}

TEST_CASE("eig_hermitian examples") {
    ComplexMatrix d(2, 2);
    d << 3, 0, 0, 1;
    auto res = eig_hermitian(op2(d));
    CHECK(res.values(0) == doctest::Approx(1.0));
    CHECK(res.values(1) == doctest::Approx(3.0));

    res = eig_hermitian(op2(sigma_x()));
    CHECK(res.values(0) == doctest::Approx(-1.0));
    CHECK(res.values(1) == doctest::Approx(1.0));

    ComplexVector phi(4);
    phi << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
    const HermitianOperator proj({2, 2}, ComplexMatrix(phi * phi.adjoint()));
    res = eig_hermitian(proj);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(res.values(i)) < 1e-12);
    CHECK(res.values(3) == doctest::Approx(1.0));
}

TEST_CASE("eig_hermitian reconstruction and eigen equations") {
    const HermitianOperator a = random_unit_trace_hermitian({2, 2}, 42);
    const auto res = eig_hermitian(a);
    ComplexMatrix rebuilt = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        rebuilt += res.values(i) * (res.vectors.col(i) * res.vectors.col(i).adjoint());
        const ComplexVector resid =
            a.matrix() * res.vectors.col(i) - res.values(i) * res.vectors.col(i);
        CHECK(resid.cwiseAbs().maxCoeff() < 1e-10);
    }
    CHECK((rebuilt - a.matrix()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("non-Hermitian construction is rejected") {
    ComplexMatrix bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS_AS(HermitianOperator({2}, bad), Error);
    CHECK_THROWS_AS(HermitianOperator({3}, ComplexMatrix::Identity(2, 2)),
                    DimensionMismatch);
}

TEST_CASE("solve_dual on projector pair") {
    // G for {|0><0|, |1><1|} is the identity, so the duals are the inputs.
    ComplexMatrix p0(2, 2), p1(2, 2);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    const std::vector<HermitianOperator> basis = {op2(p0), op2(p1)};
    const auto duals = solve_dual(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < duals.size(); ++j) {
            const double expect = i == j ? 1.0 : 0.0;
            CHECK(std::abs(hs_inner(basis[i], duals[j]) - expect) < 1e-10);
        }
    }
}

TEST_CASE("solve_dual identity and Pauli families") {
    const auto id = HermitianOperator::identity({2});
    auto duals = solve_dual({id});
    CHECK((duals[0].matrix() - ComplexMatrix::Identity(2, 2) / 2.0)
              .cwiseAbs()
              .maxCoeff() < 1e-12);

    duals = solve_dual({id, op2(sigma_z())});
    CHECK((duals[0].matrix() - ComplexMatrix::Identity(2, 2) / 2.0)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((duals[1].matrix() - sigma_z() / 2.0).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("solve_dual rejects dependent families") {
    const auto id = HermitianOperator::identity({2});
    const HermitianOperator almost({2}, ComplexMatrix::Identity(2, 2) * (1.0 + 1e-13));
    CHECK_THROWS_AS(solve_dual({id, almost}), GramSingular);
}

TEST_CASE("duality contract on random independent families") {
    auto rng = seeded_rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<HermitianOperator> basis;
        basis.push_back(HermitianOperator::identity({3}));
        for (int k = 0; k < 3; ++k) {
            const ComplexVector v = haar_unit_vector(3, rng);
            basis.emplace_back(std::vector<int>{3}, ComplexMatrix(v * v.adjoint()));
        }
        const auto duals = solve_dual(basis);
        double worst = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = 0; j < duals.size(); ++j) {
                const double expect = i == j ? 1.0 : 0.0;
                worst = std::max(worst,
                                 std::abs(hs_inner(basis[i], duals[j]) - expect));
            }
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("samplers are seed-deterministic") {
    const auto a = random_unit_trace_hermitian({2, 2}, 5);
    const auto b = random_unit_trace_hermitian({2, 2}, 5);
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.trace() == doctest::Approx(1.0).epsilon(1e-12));

    const auto rho = random_density_matrix({2, 2}, 5);
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig_hermitian(rho).values(0) >= -1e-14);
}
