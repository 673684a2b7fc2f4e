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

#include "mkbell/bell.hpp"

#include <cmath>
#include <string>

#include "mkbell/errors.hpp"

namespace mkbell {

namespace {

Eigen::Matrix2cd pauli_along(const Eigen::Vector3d& direction) {
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd sigma;
    sigma << direction.z(), direction.x() - i * direction.y(),
             direction.x() + i * direction.y(), -direction.z();
    return sigma;
}

void check_unit(const Eigen::Vector3d& v, int qubit) {
    if (std::abs(v.norm() - 1.0) > 1e-12) {
        throw NonUnitVectorError("measurement direction of qubit " + std::to_string(qubit) +
                                 " has norm " + std::to_string(v.norm()));
    }
}

int popcount64(std::uint64_t x) {
    return static_cast<int>(__builtin_popcountll(x));
}

}  // namespace

MeasurementFrame MeasurementFrame::all_xy(int n_qubits) {
    MeasurementFrame frame;
    frame.axes.assign(n_qubits, Eigen::Vector3d::UnitX());
    frame.primed_axes.assign(n_qubits, Eigen::Vector3d::UnitY());
    return frame;
}

DenseOperator mk_operator(const MeasurementFrame& frame) {
    const int n = frame.n_qubits();
    if (n < 1 || static_cast<int>(frame.primed_axes.size()) != n) {
        throw IndexRangeError("frame must carry one axis pair per qubit");
    }
    if (n > dense_cap()) {
        throw DimensionCapError("mk_operator capped at N <= " + std::to_string(dense_cap()));
    }
    for (int i = 0; i < n; ++i) {
        check_unit(frame.axes[i], i + 1);
        check_unit(frame.primed_axes[i], i + 1);
    }

    Eigen::MatrixXcd bell = pauli_along(frame.axes[0]);
    Eigen::MatrixXcd bell_primed = pauli_along(frame.primed_axes[0]);
    for (int i = 1; i < n; ++i) {
        const Eigen::Matrix2cd s = pauli_along(frame.axes[i]);
        const Eigen::Matrix2cd sp = pauli_along(frame.primed_axes[i]);
        // B' is B with every axis pair swapped, so one joint recursion
        // produces both without re-walking the chain.
        Eigen::MatrixXcd next = 0.5 * (kron(bell, s + sp) + kron(bell_primed, s - sp));
        Eigen::MatrixXcd next_primed = 0.5 * (kron(bell_primed, sp + s) + kron(bell, sp - s));
        bell = std::move(next);
        bell_primed = std::move(next_primed);
    }
    return DenseOperator{n, std::move(bell)};
}

DenseOperator canonical_mk_operator(int n_qubits) {
    if (n_qubits < 1) {
        throw IndexRangeError("n_qubits must be >= 1");
    }
    if (n_qubits > dense_cap()) {
        throw DimensionCapError("canonical_mk_operator capped at N <= " +
                                std::to_string(dense_cap()));
    }
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n_qubits);
    const double scale = std::exp2(0.5 * (n_qubits - 1));
    DenseOperator op;
    op.n_qubits = n_qubits;
    op.entries = Eigen::MatrixXcd::Zero(dim, dim);
    // 2^((N-1)/2)(P+ - P-) collapses to the bare corner coherence.
    op.entries(0, dim - 1) = scale;
    op.entries(dim - 1, 0) = scale;
    return op;
}

PhaseAlignment align_phases(const DenseOperator& xy_operator) {
    const int n = xy_operator.n_qubits;
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
    if (xy_operator.entries.rows() != dim || xy_operator.entries.cols() != dim) {
        throw IndexRangeError("operator shape does not match qubit count");
    }
    const Complex corner = xy_operator.entries(0, dim - 1);
    const double phase = (std::abs(corner) == 0.0) ? 0.0 : std::arg(corner) / n;

    PhaseAlignment result;
    result.phases.assign(n, phase);
    result.aligned.n_qubits = n;
    result.aligned.entries.resize(dim, dim);
    // Conjugation by a diagonal of local phases multiplies entry (r, c) by
    // e^{i(phi(r) - phi(c))} with phi(x) = popcount(x) * phase.
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            const int diff = popcount64(static_cast<std::uint64_t>(r)) -
                             popcount64(static_cast<std::uint64_t>(c));
            result.aligned.entries(r, c) =
                xy_operator.entries(r, c) * std::polar(1.0, phase * diff);
        }
    }

    const DenseOperator canonical = canonical_mk_operator(n);
    const double residual =
        (result.aligned.entries - canonical.entries).cwiseAbs().maxCoeff();
    if (residual > 1e-10) {
        throw AlignmentFailedError("alignment residual " + std::to_string(residual) +
                                   " exceeds 1e-10; operator is not in the x/y frame");
    }
    return result;
}

MkValueResult mk_value(const LambdaState& state) {
    MkValueResult result;
    result.value = std::exp2(0.5 * (state.n_qubits() - 1)) * to_double(state.delta());
    result.violated = violates_mk(state);
    result.threshold = 1.0;
    return result;
}

bool violates_mk(const LambdaState& state) {
    const Rational delta = state.delta();
    if (delta <= 0) return false;
    return delta * delta * pow2_rational(state.n_qubits() - 1) > 1;
}

}  // namespace mkbell
