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

#ifndef MKBELL_DENSE_HPP
#define MKBELL_DENSE_HPP

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "mkbell/family.hpp"
#include "mkbell/splits.hpp"

namespace mkbell {

using Complex = std::complex<double>;

// Qubit 1 is the leftmost (most significant) tensor factor throughout, so
// the basis index of |j>|b> over the first N-1 qubits and the last one is
// 2j + b.
struct StateVector {
    int n_qubits = 0;
    Eigen::VectorXcd amplitudes;
};

struct DenseOperator {
    int n_qubits = 0;
    Eigen::MatrixXcd entries;
};

enum class Sign { Plus, Minus };
enum class PtClass { Npt, Ppt, Indeterminate };

/// Matrix construction cap (2^N x 2^N entries). Defaults to 12; can be
/// lowered via the MKBELL_DENSE_CAP environment variable, never raised
/// above 12.
int dense_cap();

/// Hermitian eigensolves stop a little earlier than construction does.
inline constexpr int kEigenCap = 10;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kNptTol = 1e-9;

/// |Psi_j^+-> = (|j>|0> +- |2^(N-1)-j-1>|1>)/sqrt(2): exactly two nonzero
/// amplitudes, +1/sqrt(2) at basis index 2j and +-1/sqrt(2) at
/// 2*(2^(N-1)-j-1)+1. Valid for 0 <= j <= 2^(N-1)-1.
StateVector psi_j(int n_qubits, std::uint64_t j, Sign sign);

/// Dense density matrix of a family state. The lambda_j pairs are diagonal
/// in the computational basis; only the lambda_0 terms contribute the GHZ
/// corner coherences.
DenseOperator densify(const LambdaState& state);

/// Depolarization map: diagonal projections onto the Psi_j^+- basis,
/// quantized to the 10^-9 grid and renormalized exactly.
/// lambda_0^+- = <Psi_0^+-|rho|Psi_0^+->,
/// 2 lambda_j  = <Psi_j^+|rho|Psi_j^+> + <Psi_j^-|rho|Psi_j^->.
/// Throws NotADensityMatrixError when rho fails validity checks.
LambdaState extract_lambda(const DenseOperator& rho);

/// Partial transpose across the split, acting on the side NOT containing
/// party N (the choice does not affect the spectrum). Involution,
/// trace-preserving. Throws SplitMismatchError on party-count mismatch.
DenseOperator partial_transpose(const DenseOperator& rho, const Split& split);

/// Smallest eigenvalue of the partial transpose (Hermitized first).
double min_pt_eigenvalue(const DenseOperator& rho, const Split& split);

/// Three-way NPT classification of the partial transpose spectrum:
/// Npt iff min_eig < -tolerance, Indeterminate iff |min_eig| <= tolerance,
/// Ppt otherwise.
PtClass is_npt(const DenseOperator& rho, const Split& split, double tolerance = kNptTol);

bool is_hermitian(const DenseOperator& op, double tol = kHermitianTol);

/// Hermitian + unit trace + spectrum >= -kPsdTol (the eigenvalue check runs
/// only up to kEigenCap). Throws NotADensityMatrixError.
void check_density_matrix(const DenseOperator& rho);

/// Eigenvalues of (A + A^dagger)/2, ascending. Throws DimensionCapError
/// above kEigenCap.
Eigen::VectorXd hermitian_eigenvalues(const DenseOperator& op);

/// Kronecker product with `right` as the faster (less significant) factor.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& left, const Eigen::MatrixXcd& right);

}  // namespace mkbell

#endif  // MKBELL_DENSE_HPP
