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

#ifndef MKBELL_FAMILY_HPP
#define MKBELL_FAMILY_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "mkbell/rational.hpp"

namespace mkbell {

/// N-qubit GHZ-diagonal state in coefficient space:
///
///   rho = lambda0_plus  |Psi_0^+><Psi_0^+|
///       + lambda0_minus |Psi_0^-><Psi_0^-|
///       + sum_j lambda_j (|Psi_j^+><Psi_j^+| + |Psi_j^-><Psi_j^-|)
///
/// with j running over 1..2^(N-1)-1. All coefficients are exact rationals
/// and must satisfy lambda0_plus + lambda0_minus + 2*sum_j lambda_j == 1.
/// The map is sparse: an absent key means lambda_j == 0, which is what makes
/// coefficient-space analysis workable far beyond the dense-matrix cap.
///
/// Immutable after construction; safe to share across threads.
class LambdaState {
  public:
    /// Validates and canonicalizes (zero-valued entries are dropped).
    /// Throws NegativeCoefficientError, IndexRangeError, NormalizationError.
    LambdaState(int n_qubits, Rational lambda0_plus, Rational lambda0_minus,
                std::map<std::uint64_t, Rational> lambdas);

    int n_qubits() const { return n_qubits_; }
    const Rational& lambda0_plus() const { return lambda0_plus_; }
    const Rational& lambda0_minus() const { return lambda0_minus_; }

    /// Sparse coefficient map; keys in 1..2^(N-1)-1, values strictly positive.
    const std::map<std::uint64_t, Rational>& lambdas() const { return lambdas_; }

    /// lambda_j with sparse default 0. Throws IndexRangeError when j is
    /// outside 1..2^(N-1)-1.
    Rational lambda(std::uint64_t j) const;

    /// Number of coefficient slots / bipartite splits: 2^(N-1)-1.
    std::uint64_t max_index() const;

    /// Delta = lambda0_plus - lambda0_minus (may be negative).
    Rational delta() const { return lambda0_plus_ - lambda0_minus_; }

    bool operator==(const LambdaState& other) const = default;

  private:
    int n_qubits_;
    Rational lambda0_plus_;
    Rational lambda0_minus_;
    std::map<std::uint64_t, Rational> lambdas_;
};

/// The pure |Psi_0^+> member (lambda0_plus = 1, everything else 0).
LambdaState ghz_state(int n_qubits);

/// Uniform sample from the probability simplex over
/// (lambda0_plus, lambda0_minus, 2*lambda_1, ..., 2*lambda_{2^(N-1)-1}),
/// quantized to the 10^-9 grid and renormalized exactly. Deterministic per
/// seed. When min_delta is set, rejection-samples until delta() > min_delta
/// and throws SamplingTimeoutError once the budget is exhausted.
///
/// The simplex has 2^(N-1)+1 coordinates, so this sampler is capped at
/// N <= 20 (DimensionCapError beyond).
LambdaState random_family_state(int n_qubits, std::uint64_t seed,
                                const std::optional<Rational>& min_delta = std::nullopt,
                                int rejection_budget = 20000);

/// Sample conditioned on exact MK violation (delta > 2^-((N-1)/2)).
///
/// Plain rejection against that event is hopeless for large N (its
/// probability under the uniform simplex decays like e^{-2^((N-1)/2)}),
/// so this draws delta uniformly from the violating interval, places
/// lambda0_minus uniformly in its admissible range, and spreads the exact
/// remainder over either the full index range or a small random support.
/// The small-support branch deliberately produces states at and beyond the
/// 2*lambda_j = delta distillability boundary. Deterministic per seed.
LambdaState random_violating_state(int n_qubits, std::uint64_t seed);

}  // namespace mkbell

#endif  // MKBELL_FAMILY_HPP
