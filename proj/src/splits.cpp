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

#include "mkbell/splits.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "mkbell/bell.hpp"
#include "mkbell/errors.hpp"

namespace mkbell {

namespace {

void check_party_count(int n_parties) {
    if (n_parties < 2 || n_parties > 62) {
        throw IndexRangeError("party count must be in [2, 62], got " +
                              std::to_string(n_parties));
    }
}

void check_index(int n_parties, std::uint64_t j) {
    check_party_count(n_parties);
    if (j < 1 || j > total_splits(n_parties)) {
        throw IndexRangeError("split index " + std::to_string(j) + " outside [1, " +
                              std::to_string(total_splits(n_parties)) + "]");
    }
}

// Bit of party i (1 <= i <= N-1) in the MSB-first convention: j_1 is the
// most significant of the N-1 bits.
bool party_bit(int n_parties, std::uint64_t j, int i) {
    return (j >> (n_parties - 1 - i)) & 1;
}

void check_pair(int n_parties, int k, int k_prime) {
    check_party_count(n_parties);
    if (k < 1 || k_prime <= k || k_prime > n_parties) {
        throw IndexRangeError("invalid party pair (" + std::to_string(k) + ", " +
                              std::to_string(k_prime) + ") for N = " +
                              std::to_string(n_parties));
    }
}

}  // namespace

std::uint64_t total_splits(int n_parties) {
    return (std::uint64_t{1} << (n_parties - 1)) - 1;
}

bool Split::separates(int k, int k_prime) const {
    return split_separates(n_parties, index, k, k_prime);
}

Split split_from_index(int n_parties, std::uint64_t j) {
    check_index(n_parties, j);
    Split split;
    split.n_parties = n_parties;
    split.index = j;
    for (int i = 1; i < n_parties; ++i) {
        (party_bit(n_parties, j, i) ? split.side_other : split.side_with_last).push_back(i);
    }
    split.side_with_last.push_back(n_parties);
    return split;
}

std::uint64_t split_index_from_group(int n_parties, const std::vector<int>& side_other) {
    check_party_count(n_parties);
    std::uint64_t j = 0;
    for (const int i : side_other) {
        if (i < 1 || i >= n_parties) {
            throw IndexRangeError("party " + std::to_string(i) +
                                  " cannot sit opposite party " + std::to_string(n_parties));
        }
        j |= std::uint64_t{1} << (n_parties - 1 - i);
    }
    if (j == 0) {
        throw IndexRangeError("the bit-1 side of a split must be non-empty");
    }
    return j;
}

bool split_separates(int n_parties, std::uint64_t j, int k, int k_prime) {
    check_index(n_parties, j);
    check_pair(n_parties, k, k_prime);
    const bool bit_k = party_bit(n_parties, j, k);
    // Party N has no bit of its own; it is pinned to the bit-0 side.
    const bool bit_kp = (k_prime == n_parties) ? false : party_bit(n_parties, j, k_prime);
    return bit_k != bit_kp;
}

bool is_split_distillable(const LambdaState& state, std::uint64_t j) {
    return 2 * state.lambda(j) < state.delta();
}

SplitReport enumerate_distillable(const LambdaState& state) {
    SplitReport report;
    report.n_parties = state.n_qubits();
    report.total = total_splits(state.n_qubits());
    report.bound = min_distillable_bound(state.n_qubits());
    report.probability_bound = distillation_probability_bound(state.n_qubits());

    const Rational delta = state.delta();
    if (delta <= 0) {
        // 2*lambda_j >= 0 >= delta for every j, boundary included.
        report.none_distillable = true;
        report.distillable_count = 0;
        return report;
    }
    // Absent keys have lambda_j = 0 < delta/2, hence are distillable; only
    // the support can fail the criterion.
    for (const auto& [j, value] : state.lambdas()) {
        if (!(2 * value < delta)) {
            report.undistillable.push_back(j);
        }
    }
    report.distillable_count = report.total - report.undistillable.size();
    assert(!violates_mk(state) || report.distillable_count >= report.bound);
    return report;
}

std::vector<std::uint64_t> distillable_indices(const SplitReport& report, std::uint64_t cap) {
    if (report.none_distillable) return {};
    if (report.distillable_count > cap) {
        throw DimensionCapError("distillable list has " +
                                std::to_string(report.distillable_count) +
                                " entries, cap is " + std::to_string(cap));
    }
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(report.distillable_count));
    auto skip = report.undistillable.begin();
    for (std::uint64_t j = 1; j <= report.total; ++j) {
        if (skip != report.undistillable.end() && *skip == j) {
            ++skip;
            continue;
        }
        out.push_back(j);
    }
    return out;
}

std::uint64_t min_distillable_bound(int n_parties) {
    check_party_count(n_parties);
    const std::uint64_t half_dim = std::uint64_t{1} << (n_parties - 1);
    if ((n_parties - 1) % 2 == 0) {
        // 2^((N-1)/2) is an integer; the floor is immediate.
        return half_dim - (std::uint64_t{1} << ((n_parties - 1) / 2)) + 1;
    }
    // 2^((N-1)/2) = sqrt(2^(N-1)) is irrational here, and for irrational x
    // floor(m + 1 - x) == m - floor(x).
    return half_dim - integer_sqrt(half_dim);
}

double distillation_probability_bound(int n_parties) {
    check_party_count(n_parties);
    return 1.0 - 1.0 / (std::exp2(0.5 * (n_parties - 1)) + 1.0);
}

std::vector<std::uint64_t> separating_splits(int n_parties, int k, int k_prime) {
    check_pair(n_parties, k, k_prime);
    if (n_parties > 24) {
        throw DimensionCapError("separating_splits materializes 2^(N-2) indices; "
                                "use split_separates for N > 24");
    }
    std::vector<std::uint64_t> out;
    out.reserve(std::size_t{1} << (n_parties - 2));
    for (std::uint64_t j = 1; j <= total_splits(n_parties); ++j) {
        if (split_separates(n_parties, j, k, k_prime)) {
            out.push_back(j);
        }
    }
    return out;
}

bool is_pair_distillable(const LambdaState& state, int k, int k_prime) {
    const int n = state.n_qubits();
    check_pair(n, k, k_prime);
    if (state.delta() <= 0) {
        // Separating splits always exist and none of them is distillable.
        return false;
    }
    // Splits off the support are distillable outright, so only the support
    // needs the separation + criterion check.
    for (const auto& [j, value] : state.lambdas()) {
        if (split_separates(n, j, k, k_prime) && !(2 * value < state.delta())) {
            return false;
        }
    }
    return true;
}

std::optional<std::pair<int, int>> find_distillable_pair(const LambdaState& state) {
    const int n = state.n_qubits();
    for (int k = 1; k < n; ++k) {
        for (int k_prime = k + 1; k_prime <= n; ++k_prime) {
            if (is_pair_distillable(state, k, k_prime)) {
                return std::make_pair(k, k_prime);
            }
        }
    }
    return std::nullopt;
}

}  // namespace mkbell
