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

#include "mkbell/dense.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "mkbell/errors.hpp"

namespace mkbell {

namespace {

constexpr int kDefaultDenseCap = 12;

void check_dense_size(int n_qubits) {
    if (n_qubits < 1) {
        throw IndexRangeError("n_qubits must be >= 1");
    }
    if (n_qubits > dense_cap()) {
        throw DimensionCapError("dense operations capped at N <= " +
                                std::to_string(dense_cap()) + ", got " +
                                std::to_string(n_qubits));
    }
}

std::uint64_t dim_of(int n_qubits) {
    return std::uint64_t{1} << n_qubits;
}

// Real part of <psi|rho|psi> for one of the two-amplitude Psi_j^+- vectors,
// with support indices a, b and relative sign s: (rho_aa + rho_bb)/2
// + s*Re(rho_ab).
double projection_onto_psi(const Eigen::MatrixXcd& rho, std::uint64_t a, std::uint64_t b,
                           double s) {
    const auto ia = static_cast<Eigen::Index>(a);
    const auto ib = static_cast<Eigen::Index>(b);
    return 0.5 * (rho(ia, ia).real() + rho(ib, ib).real()) + s * rho(ia, ib).real();
}

}  // namespace

int dense_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("MKBELL_DENSE_CAP")) {
            const int requested = std::atoi(env);
            if (requested >= 1 && requested <= kDefaultDenseCap) {
                return requested;
            }
        }
        return kDefaultDenseCap;
    }();
    return cap;
}

StateVector psi_j(int n_qubits, std::uint64_t j, Sign sign) {
    check_dense_size(n_qubits);
    const std::uint64_t half = std::uint64_t{1} << (n_qubits - 1);
    if (j >= half) {
        throw IndexRangeError("psi index " + std::to_string(j) + " outside [0, " +
                              std::to_string(half - 1) + "]");
    }
    StateVector psi;
    psi.n_qubits = n_qubits;
    psi.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim_of(n_qubits)));
    const double amp = 1.0 / std::numbers::sqrt2;
    psi.amplitudes(static_cast<Eigen::Index>(2 * j)) = amp;
    psi.amplitudes(static_cast<Eigen::Index>(2 * (half - j - 1) + 1)) =
        (sign == Sign::Plus) ? amp : -amp;
    return psi;
}

DenseOperator densify(const LambdaState& state) {
    const int n = state.n_qubits();
    check_dense_size(n);
    const auto dim = static_cast<Eigen::Index>(dim_of(n));
    const std::uint64_t half = std::uint64_t{1} << (n - 1);

    DenseOperator rho;
    rho.n_qubits = n;
    rho.entries = Eigen::MatrixXcd::Zero(dim, dim);

    // lambda_0 terms: diagonal weight on |0..0> and |1..1| plus the GHZ
    // corner coherence (lambda0_plus - lambda0_minus)/2.
    const double l0p = to_double(state.lambda0_plus());
    const double l0m = to_double(state.lambda0_minus());
    rho.entries(0, 0) = 0.5 * (l0p + l0m);
    rho.entries(dim - 1, dim - 1) = 0.5 * (l0p + l0m);
    rho.entries(0, dim - 1) = 0.5 * (l0p - l0m);
    rho.entries(dim - 1, 0) = 0.5 * (l0p - l0m);

    // |Psi_j^+><Psi_j^+| + |Psi_j^-><Psi_j^-| = |2j><2j| + |2jbar+1><2jbar+1|:
    // the cross terms cancel, so the tail is purely diagonal.
    for (const auto& [j, value] : state.lambdas()) {
        const double lam = to_double(value);
        const auto a = static_cast<Eigen::Index>(2 * j);
        const auto b = static_cast<Eigen::Index>(2 * (half - j - 1) + 1);
        rho.entries(a, a) += lam;
        rho.entries(b, b) += lam;
    }
    return rho;
}

LambdaState extract_lambda(const DenseOperator& rho) {
    check_density_matrix(rho);
    const int n = rho.n_qubits;
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    const std::uint64_t last = dim_of(n) - 1;

    // Quantize every diagonal projection, then renormalize by the exact sum
    // so the resulting state satisfies the normalization identity exactly.
    const auto grid = [](double v) { return quantize(v < 0.0 ? 0.0 : v); };

    const Rational l0p = grid(projection_onto_psi(rho.entries, 0, last, +1.0));
    const Rational l0m = grid(projection_onto_psi(rho.entries, 0, last, -1.0));
    Rational sum = l0p + l0m;

    std::map<std::uint64_t, Rational> two_lambda;
    for (std::uint64_t j = 1; j < half; ++j) {
        const std::uint64_t a = 2 * j;
        const std::uint64_t b = 2 * (half - j - 1) + 1;
        const double raw = rho.entries(static_cast<Eigen::Index>(a),
                                       static_cast<Eigen::Index>(a)).real() +
                           rho.entries(static_cast<Eigen::Index>(b),
                                       static_cast<Eigen::Index>(b)).real();
        const Rational q = grid(raw);
        if (q != 0) {
            two_lambda.emplace(j, q);
            sum += q;
        }
    }
    if (sum <= 0) {
        throw NotADensityMatrixError("diagonal projections sum to zero");
    }
    std::map<std::uint64_t, Rational> lambdas;
    for (const auto& [j, q] : two_lambda) {
        lambdas.emplace(j, q / (2 * sum));
    }
    return LambdaState(n, l0p / sum, l0m / sum, std::move(lambdas));
}

DenseOperator partial_transpose(const DenseOperator& rho, const Split& split) {
    if (split.n_parties != rho.n_qubits) {
        throw SplitMismatchError("split is over " + std::to_string(split.n_parties) +
                                 " parties, operator over " + std::to_string(rho.n_qubits));
    }
    const int n = rho.n_qubits;
    // Transpose the side opposite party N: qubit i occupies bit N-i of the
    // basis index (qubit 1 is the most significant).
    std::uint64_t mask = 0;
    for (const int party : split.side_other) {
        mask |= std::uint64_t{1} << (n - party);
    }
    const std::uint64_t dim = dim_of(n);
    DenseOperator out;
    out.n_qubits = n;
    out.entries = Eigen::MatrixXcd(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            const std::uint64_t rr = (r & ~mask) | (c & mask);
            const std::uint64_t cc = (c & ~mask) | (r & mask);
            out.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                rho.entries(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(cc));
        }
    }
    return out;
}

double min_pt_eigenvalue(const DenseOperator& rho, const Split& split) {
    const DenseOperator pt = partial_transpose(rho, split);
    const Eigen::VectorXd eigs = hermitian_eigenvalues(pt);
    return eigs(0);
}

PtClass is_npt(const DenseOperator& rho, const Split& split, double tolerance) {
    const double min_eig = min_pt_eigenvalue(rho, split);
    if (min_eig < -tolerance) return PtClass::Npt;
    if (min_eig <= tolerance) return PtClass::Indeterminate;
    return PtClass::Ppt;
}

bool is_hermitian(const DenseOperator& op, double tol) {
    return (op.entries - op.entries.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void check_density_matrix(const DenseOperator& rho) {
    if (rho.entries.rows() != rho.entries.cols() ||
        rho.entries.rows() != static_cast<Eigen::Index>(dim_of(rho.n_qubits))) {
        throw NotADensityMatrixError("matrix shape does not match qubit count");
    }
    if (!is_hermitian(rho)) {
        throw NotADensityMatrixError("matrix is not Hermitian within tolerance");
    }
    if (std::abs(rho.entries.trace().real() - 1.0) > kHermitianTol ||
        std::abs(rho.entries.trace().imag()) > kHermitianTol) {
        throw NotADensityMatrixError("trace differs from one");
    }
    if (rho.n_qubits <= kEigenCap) {
        const Eigen::VectorXd eigs = hermitian_eigenvalues(rho);
        if (eigs(0) < -kPsdTol) {
            throw NotADensityMatrixError("matrix has eigenvalue " + std::to_string(eigs(0)));
        }
    }
}

Eigen::VectorXd hermitian_eigenvalues(const DenseOperator& op) {
    if (op.n_qubits > kEigenCap) {
        throw DimensionCapError("eigensolves capped at N <= " + std::to_string(kEigenCap));
    }
    // Hermitize explicitly to suppress drift from accumulated round-off.
    const Eigen::MatrixXcd sym = 0.5 * (op.entries + op.entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& left, const Eigen::MatrixXcd& right) {
    Eigen::MatrixXcd out(left.rows() * right.rows(), left.cols() * right.cols());
    for (Eigen::Index r = 0; r < left.rows(); ++r) {
        for (Eigen::Index c = 0; c < left.cols(); ++c) {
            out.block(r * right.rows(), c * right.cols(), right.rows(), right.cols()) =
                left(r, c) * right;
        }
    }
    return out;
}

}  // namespace mkbell
