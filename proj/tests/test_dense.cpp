// Copyright 2026 The mkbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "mkbell/bec.hpp"
#include "mkbell/dense.hpp"
#include "mkbell/errors.hpp"
#include "support/oracles.hpp"

using namespace mkbell;

TEST_CASE("psi vectors sit at the defining basis indices") {
    SUBCASE("N=2, j=0, plus: the Bell corner pair") {
        const StateVector psi = psi_j(2, 0, Sign::Plus);
        const double amp = 1.0 / std::sqrt(2.0);
        CHECK(psi.amplitudes(0).real() == doctest::Approx(amp).epsilon(1e-14));
        CHECK(psi.amplitudes(1) == Complex(0, 0));
        CHECK(psi.amplitudes(2) == Complex(0, 0));
        CHECK(psi.amplitudes(3).real() == doctest::Approx(amp).epsilon(1e-14));
    }
    SUBCASE("N=3, j=0, plus: GHZ component") {
        const StateVector psi = psi_j(3, 0, Sign::Plus);
        CHECK(psi.amplitudes(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(psi.amplitudes(7).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(psi.amplitudes.cwiseAbs().sum() ==
              doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    }
    SUBCASE("N=3, j=1, minus: indices 2 and 5 with opposite signs") {
        const StateVector psi = psi_j(3, 1, Sign::Minus);
        CHECK(psi.amplitudes(2).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(psi.amplitudes(5).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
    }
    SUBCASE("index range") {
        CHECK_THROWS_AS(psi_j(3, 4, Sign::Plus), IndexRangeError);
    }
}

TEST_CASE("the 2^N psi vectors are a complete orthonormal basis") {
    for (const int n : {2, 3, 5, 8}) {
        const std::uint64_t half = std::uint64_t{1} << (n - 1);
        std::vector<StateVector> basis;
        for (std::uint64_t j = 0; j < half; ++j) {
            basis.push_back(psi_j(n, j, Sign::Plus));
            basis.push_back(psi_j(n, j, Sign::Minus));
        }
        double max_gram_error = 0.0;
        for (std::size_t a = 0; a < basis.size(); ++a) {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                const Complex inner = basis[a].amplitudes.dot(basis[b].amplitudes);
                const double expected = (a == b) ? 1.0 : 0.0;
                max_gram_error = std::max(max_gram_error, std::abs(inner - expected));
            }
        }
        CHECK(max_gram_error < 1e-12);
    }
}

TEST_CASE("densify reproduces the reference matrices") {
    SUBCASE("GHZ(2): 1/2 at the four corners") {
        const DenseOperator rho = densify(ghz_state(2));
        CHECK(rho.entries(0, 0).real() == doctest::Approx(0.5));
        CHECK(rho.entries(0, 3).real() == doctest::Approx(0.5));
        CHECK(rho.entries(3, 0).real() == doctest::Approx(0.5));
        CHECK(rho.entries(3, 3).real() == doctest::Approx(0.5));
        CHECK(rho.entries.cwiseAbs().sum() == doctest::Approx(2.0).epsilon(1e-13));
    }
    SUBCASE("six-qubit construction: trace one, rank 9") {
        const DenseOperator rho = densify(be_state(6));
        CHECK(rho.entries.rows() == 64);
        CHECK(rho.entries.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
        const Eigen::VectorXd eigs = hermitian_eigenvalues(rho);
        int rank = 0;
        for (Eigen::Index i = 0; i < eigs.size(); ++i) {
            if (eigs(i) > 1e-12) ++rank;
        }
        CHECK(rank == 9);
    }
    SUBCASE("uniform coefficients give the maximally mixed state") {
        const int n = 4;
        const Rational w(1, 16);
        std::map<std::uint64_t, Rational> lambdas;
        for (std::uint64_t j = 1; j <= 7; ++j) lambdas.emplace(j, w);
        const DenseOperator rho = densify(LambdaState(n, w, w, std::move(lambdas)));
        const Eigen::MatrixXcd expected =
            Eigen::MatrixXcd::Identity(16, 16) / 16.0;
        CHECK((rho.entries - expected).cwiseAbs().maxCoeff() < 1e-15);
    }
    SUBCASE("densify equals the projector sum over psi vectors") {
        std::uint64_t seed = 31;
        for (const int n : {2, 3, 4}) {
            const LambdaState state = random_family_state(n, seed++);
            const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
            Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(dim, dim);
            const std::uint64_t half = std::uint64_t{1} << (n - 1);
            for (std::uint64_t j = 0; j < half; ++j) {
                for (const Sign sign : {Sign::Plus, Sign::Minus}) {
                    Rational weight;
                    if (j == 0) {
                        weight = (sign == Sign::Plus) ? state.lambda0_plus()
                                                      : state.lambda0_minus();
                    } else {
                        weight = state.lambda(j);
                    }
                    const StateVector psi = psi_j(n, j, sign);
                    expected += to_double(weight) * psi.amplitudes *
                                psi.amplitudes.adjoint();
                }
            }
            CHECK((densify(state).entries - expected).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
    SUBCASE("construction cap") {
        CHECK_THROWS_AS(densify(random_violating_state(13, 1)), DimensionCapError);
    }
}

TEST_CASE("extract_lambda inverts densify up to quantization") {
    std::uint64_t seed = 500;
    for (const int n : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 10; ++trial) {
            const LambdaState state = random_family_state(n, seed++);
            const LambdaState back = extract_lambda(densify(state));
            CHECK(std::abs(to_double(back.lambda0_plus() - state.lambda0_plus())) < 1e-9);
            CHECK(std::abs(to_double(back.lambda0_minus() - state.lambda0_minus())) < 1e-9);
            for (std::uint64_t j = 1; j <= state.max_index(); ++j) {
                CHECK(std::abs(to_double(back.lambda(j) - state.lambda(j))) < 1e-9);
            }
        }
    }
}

TEST_CASE("extract_lambda on reference and random inputs") {
    SUBCASE("pure GHZ projector has lambda0_plus = 1") {
        const LambdaState state = extract_lambda(densify(ghz_state(3)));
        CHECK(state.lambda0_plus() == 1);
        CHECK(state.lambda0_minus() == 0);
        CHECK(state.lambdas().empty());
    }
    SUBCASE("random density matrix matches the straight-loop projections") {
        const int n = 3;
        const Eigen::MatrixXcd rho = oracles::random_density_matrix(n, 42);
        const LambdaState state = extract_lambda(DenseOperator{n, rho});

        const auto p_plus = oracles::expectation(oracles::reference_psi(n, 0, +1), rho);
        const auto p_minus = oracles::expectation(oracles::reference_psi(n, 0, -1), rho);
        CHECK(std::abs(to_double(state.lambda0_plus()) - p_plus) < 1e-9);
        CHECK(std::abs(to_double(state.lambda0_minus()) - p_minus) < 1e-9);
        for (std::uint64_t j = 1; j <= 3; ++j) {
            const auto pj = oracles::expectation(oracles::reference_psi(n, j, +1), rho) +
                            oracles::expectation(oracles::reference_psi(n, j, -1), rho);
            CHECK(std::abs(2.0 * to_double(state.lambda(j)) - pj) < 1e-9);
        }
    }
    SUBCASE("non-density input is rejected") {
        DenseOperator bad{2, Eigen::MatrixXcd::Identity(4, 4)};  // trace 4
        CHECK_THROWS_AS(extract_lambda(bad), NotADensityMatrixError);
        bad.entries(0, 1) = Complex(0.5, 0.5);  // not Hermitian either
        CHECK_THROWS_AS(extract_lambda(bad), NotADensityMatrixError);
    }
}

TEST_CASE("partial transpose: product states, Bell state, involution") {
    SUBCASE("product state stays positive") {
        // rho_A (x) rho_B with rho_A = diag(3/4, 1/4), rho_B = |+><+|.
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
        a(0, 0) = 0.75;
        a(1, 1) = 0.25;
        Eigen::MatrixXcd b(2, 2);
        b << 0.5, 0.5, 0.5, 0.5;
        const DenseOperator rho{2, kron(a, b)};
        const Split split = split_from_index(2, 1);
        const DenseOperator pt = partial_transpose(rho, split);
        CHECK((pt.entries - kron(a, b.transpose())).cwiseAbs().maxCoeff() < 1e-15);
        CHECK(hermitian_eigenvalues(pt)(0) >= -1e-15);
    }
    SUBCASE("Bell state: PT minimum eigenvalue is exactly -1/2") {
        const DenseOperator rho = densify(ghz_state(2));
        CHECK(min_pt_eigenvalue(rho, split_from_index(2, 1)) ==
              doctest::Approx(-0.5).epsilon(1e-12));
    }
    SUBCASE("involution, exactly") {
        const DenseOperator rho{3, oracles::random_density_matrix(3, 77)};
        for (std::uint64_t j = 1; j <= 3; ++j) {
            const Split split = split_from_index(3, j);
            const DenseOperator twice =
                partial_transpose(partial_transpose(rho, split), split);
            CHECK((twice.entries - rho.entries).cwiseAbs().maxCoeff() == 0.0);
            CHECK(partial_transpose(rho, split).entries.trace() == rho.entries.trace());
        }
    }
    SUBCASE("party-count mismatch") {
        const DenseOperator rho = densify(ghz_state(2));
        CHECK_THROWS_AS(partial_transpose(rho, split_from_index(3, 1)),
                        SplitMismatchError);
    }
}

TEST_CASE("NPT classification bands") {
    SUBCASE("Bell state is NPT") {
        CHECK(is_npt(densify(ghz_state(2)), split_from_index(2, 1)) == PtClass::Npt);
    }
    SUBCASE("maximally mixed state is PPT for every split") {
        const int n = 3;
        DenseOperator rho{n, Eigen::MatrixXcd::Identity(8, 8) / 8.0};
        for (std::uint64_t j = 1; j <= 3; ++j) {
            CHECK(is_npt(rho, split_from_index(n, j)) == PtClass::Ppt);
        }
    }
    SUBCASE("the boundary split of the six-qubit construction is not NPT-certified") {
        const DenseOperator rho = densify(be_state(6));
        const double min_eig = min_pt_eigenvalue(rho, split_from_index(6, 3));
        // 2*lambda_3 == delta puts the smallest PT eigenvalue at exactly zero
        // (measured fixture: 0.0).
        CHECK(std::abs(min_eig) < 1e-12);
        CHECK(is_npt(rho, split_from_index(6, 3)) != PtClass::Npt);
        // Off the boundary the construction is NPT as the criterion predicts,
        // with minimum eigenvalue (2*lambda_1 - delta)/2 = -1/10.
        CHECK(min_pt_eigenvalue(rho, split_from_index(6, 1)) ==
              doctest::Approx(-0.1).epsilon(1e-12));
        CHECK(is_npt(rho, split_from_index(6, 1)) == PtClass::Npt);
    }
}

TEST_CASE("criterion/oracle agreement on off-boundary family states") {
    std::uint64_t seed = 1234;
    int checked = 0;
    for (const int n : {2, 3, 4, 5}) {
        for (int trial = 0; trial < 12; ++trial) {
            const LambdaState state = random_family_state(n, seed++, Rational(0));
            bool off_boundary = state.delta() > Rational(1, 1000000);
            for (const auto& [j, value] : state.lambdas()) {
                const Rational gap = 2 * value - state.delta();
                off_boundary = off_boundary &&
                               (gap > Rational(1, 1000000) || gap < Rational(-1, 1000000));
            }
            if (!off_boundary) continue;
            const DenseOperator rho = densify(state);
            for (std::uint64_t j = 1; j <= total_splits(n); ++j) {
                const bool criterion = is_split_distillable(state, j);
                const PtClass cls = is_npt(rho, split_from_index(n, j));
                CHECK((cls == PtClass::Npt) == criterion);
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("eigensolver cap and env-set dense cap") {
    DenseOperator big{kEigenCap + 1,
                      Eigen::MatrixXcd::Identity(1 << (kEigenCap + 1), 1 << (kEigenCap + 1))};
    CHECK_THROWS_AS(hermitian_eigenvalues(big), DimensionCapError);
    CHECK(dense_cap() >= 2);
    CHECK(dense_cap() <= 12);
}
