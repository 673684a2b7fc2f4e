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

#ifndef MKBELL_BELL_HPP
#define MKBELL_BELL_HPP

#include <vector>

#include "mkbell/dense.hpp"
#include "mkbell/family.hpp"

namespace mkbell {

/// Two measurement directions per qubit, as unit vectors on the Bloch
/// sphere. The pair (axes[i], primed_axes[i]) defines the dichotomic
/// observables sigma . n and sigma . n' of qubit i+1.
struct MeasurementFrame {
    std::vector<Eigen::Vector3d> axes;
    std::vector<Eigen::Vector3d> primed_axes;

    int n_qubits() const { return static_cast<int>(axes.size()); }

    /// The frame attaining the maximal violation on GHZ-corner states:
    /// n = x, n' = y on every qubit.
    static MeasurementFrame all_xy(int n_qubits);
};

struct MkValueResult {
    double value = 0.0;      // tr(B_N rho)
    bool violated = false;   // |value| exceeds the local-hidden-variable bound
    double threshold = 1.0;
};

struct PhaseAlignment {
    std::vector<double> phases;  // per-qubit phase of diag(1, e^{i phi})
    DenseOperator aligned;
};

/// Recursive Mermin-Klyshko operator
///   B_i = [ B_{i-1} x (s_n + s_n') + B'_{i-1} x (s_n - s_n') ] / 2
/// with B_1 = sigma_{n_1} and B' the full primed/unprimed swap of B.
/// Both operators are carried jointly up the chain, one level per qubit.
/// Throws NonUnitVectorError / DimensionCapError.
DenseOperator mk_operator(const MeasurementFrame& frame);

/// Rank-2 projector form 2^((N-1)/2) (|Psi_0^+><Psi_0^+| - |Psi_0^-><Psi_0^-|),
/// i.e. the GHZ corner coherence scaled to the maximal quantum value.
DenseOperator canonical_mk_operator(int n_qubits);

/// Per-qubit phases phi_i such that conjugating by the product of
/// diag(1, e^{i phi_i}) maps the all-(x, y) operator onto
/// canonical_mk_operator(N) entrywise within 1e-10. The total phase is read
/// off the |0..0><1..1| element and spread equally across qubits.
/// Throws AlignmentFailedError when the residual stays above tolerance
/// (i.e. the input was not the canonical x/y frame).
PhaseAlignment align_phases(const DenseOperator& xy_operator);

/// tr(B_N rho) for a family state, evaluated in coefficient space as
/// 2^((N-1)/2) * delta; no matrices, so valid for any N. The violation flag
/// is decided exactly (see violates_mk).
MkValueResult mk_value(const LambdaState& state);

/// Exact MK violation test: delta > 2^-((N-1)/2), decided in rational
/// arithmetic as delta > 0 and delta^2 * 2^(N-1) > 1 (2^((N-1)/2) is
/// irrational for even N, so the squared form is compared). One-sided in
/// the operator's positive orientation, like the distillability criterion:
/// a state with delta < 0 is the local-unitary mirror of its |delta|
/// counterpart and is reported as non-violating here.
bool violates_mk(const LambdaState& state);

}  // namespace mkbell

#endif  // MKBELL_BELL_HPP
