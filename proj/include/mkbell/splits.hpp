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

#ifndef MKBELL_SPLITS_HPP
#define MKBELL_SPLITS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mkbell/family.hpp"

namespace mkbell {

/// Bipartition P_j of parties 1..N, encoded by an (N-1)-bit index j with
/// j_1 the most significant bit. Party i < N sits with party N exactly when
/// bit j_i == 0, so j >= 1 guarantees both sides are non-empty.
struct Split {
    int n_parties = 0;
    std::uint64_t index = 0;
    std::vector<int> side_with_last;  // parties grouped with party N, sorted
    std::vector<int> side_other;      // parties with bit 1, sorted

    /// True when parties k and k_prime end up on opposite sides.
    bool separates(int k, int k_prime) const;
};

/// Number of bipartite splits of N parties: 2^(N-1)-1.
std::uint64_t total_splits(int n_parties);

/// Decodes index j into its two party groups. Throws IndexRangeError.
Split split_from_index(int n_parties, std::uint64_t j);

/// Inverse of split_from_index: index from the bit-1 group. Used to check
/// that the encoding is a bijection.
std::uint64_t split_index_from_group(int n_parties, const std::vector<int>& side_other);

/// Membership test without materializing the Split (party N counts as the
/// bit-0 side).
bool split_separates(int n_parties, std::uint64_t j, int k, int k_prime);

/// Exact distillability criterion for split P_j: 2*lambda_j < delta,
/// strict, decided in rational arithmetic. Boundary equality is NOT
/// distillable. Throws IndexRangeError.
bool is_split_distillable(const LambdaState& state, std::uint64_t j);

/// Outcome of enumerating all splits of one state.
///
/// Enumeration exploits sparsity: when delta > 0 every index absent from
/// the coefficient map is distillable, so `undistillable` (a subset of the
/// map's support) is the exhaustive complement. When delta <= 0 nothing is
/// distillable; `none_distillable` is set and the vector is left empty
/// rather than materializing all 2^(N-1)-1 indices.
struct SplitReport {
    int n_parties = 0;
    std::uint64_t total = 0;
    std::uint64_t distillable_count = 0;
    std::uint64_t bound = 0;            // guaranteed count for MK-violating states
    double probability_bound = 0.0;     // closed-form P(N) lower bound
    bool none_distillable = false;
    std::vector<std::uint64_t> undistillable;  // sorted ascending
};

SplitReport enumerate_distillable(const LambdaState& state);

/// Materializes the distillable index list from a report (complement of
/// `undistillable`). Guarded: throws DimensionCapError when the list would
/// exceed `cap` entries.
std::vector<std::uint64_t> distillable_indices(const SplitReport& report,
                                               std::uint64_t cap = (std::uint64_t{1} << 22));

/// floor(2^(N-1) - 2^((N-1)/2) + 1) in pure integer arithmetic: the
/// guaranteed number of distillable splits of any MK-violating state.
std::uint64_t min_distillable_bound(int n_parties);

/// Closed-form lower bound 1 - 1/(2^((N-1)/2)+1) on the probability that a
/// random split of an MK-violating state is distillable.
double distillation_probability_bound(int n_parties);

/// All split indices placing parties k and k_prime on opposite sides
/// (1 <= k < k_prime <= N). Always 2^(N-2) of them. Materialized, so only
/// suitable for small N; large-N callers use split_separates directly.
std::vector<std::uint64_t> separating_splits(int n_parties, int k, int k_prime);

/// Whether a maximally entangled pair between parties k and k_prime is
/// distillable: every separating split must be distillable. Evaluated
/// sparsely in O(|support|).
bool is_pair_distillable(const LambdaState& state, int k, int k_prime);

/// Lexicographically smallest distillable pair, if any.
std::optional<std::pair<int, int>> find_distillable_pair(const LambdaState& state);

}  // namespace mkbell

#endif  // MKBELL_SPLITS_HPP
