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

#ifndef MKBELL_BEC_HPP
#define MKBELL_BEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mkbell/family.hpp"

namespace mkbell {

enum class Verdict {
    BoundEntangledViolating,  // violates MK, no distillable pair, inseparable
    NotViolating,
    Distillable,  // violates MK but some pair remains distillable
};

enum class WitnessKind {
    DenseNpt,   // witness_split holds an NPT split found by the dense oracle
    Criterion,  // above the dense cap; inseparability taken from the criterion
};

std::string verdict_name(Verdict verdict);
std::string witness_kind_name(WitnessKind kind);

struct BeCertificate {
    int n_qubits = 0;
    double mk_value = 0.0;
    bool mk_violated = false;
    std::vector<std::uint64_t> undistillable_splits;  // sorted ascending
    bool all_pairs_blocked = false;
    WitnessKind witness_kind = WitnessKind::Criterion;
    std::optional<std::uint64_t> witness_split;
    Verdict verdict = Verdict::NotViolating;
};

/// Index set of the undistillable splits of the construction:
/// {3 * 2^m : m = 0..N-3}, cardinality N-2. Requires N >= 3.
std::vector<std::uint64_t> j_set(int n_qubits);

/// The candidate bound-entangled state: lambda0_plus = 1/(N-1),
/// lambda0_minus = 0, lambda_j = 1/(2(N-1)) exactly on j_set(N). Every
/// split in the set sits exactly on the 2*lambda_j = delta boundary.
LambdaState be_state(int n_qubits);

/// True when every pair of parties is separated by at least one split in
/// j_set(N), i.e. no maximally entangled pair survives. Exhaustive over
/// the N(N-1)/2 pairs. Enumeration gives false at N = 3 (pair (1,2) has no
/// separating split in {3}) and true for all N >= 4.
bool verify_pair_blocking(int n_qubits);

/// Full verification pipeline for be_state(N): MK value and violation,
/// undistillable split set, pair blocking, and (when the dense oracle is
/// within reach) an NPT split witnessing inseparability.
BeCertificate certify(int n_qubits);

}  // namespace mkbell

#endif  // MKBELL_BEC_HPP
