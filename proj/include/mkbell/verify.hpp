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

#ifndef MKBELL_VERIFY_HPP
#define MKBELL_VERIFY_HPP

#include <cstdint>
#include <iosfwd>

#include "mkbell/dense.hpp"

namespace mkbell {

/// Outcome of a randomized verification suite. Failed trials are logged
/// with a full dump of the offending state so they can be replayed.
struct SuiteOutcome {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t skips = 0;  // boundary-band resamples (oracle suite only)

    bool passed() const { return failures == 0; }
};

/// Counting bound: every MK-violating state has at least
/// floor(2^(N-1) - 2^((N-1)/2) + 1) distillable splits. Runs
/// `trials_per_n` violating states for each N in [n_min, n_max]; the count
/// comparison is exact.
SuiteOutcome run_bound_suite(std::uint64_t seed, int trials_per_n, int n_min, int n_max,
                             std::ostream& log);

/// Criterion/oracle equivalence: dense partial-transpose classification
/// agrees with 2*lambda_j < delta on every split, for states kept clear of
/// the boundary (|2*lambda_j - delta| > band for all j, delta > 0).
SuiteOutcome run_prop1_oracle_suite(std::uint64_t seed, int trials_per_n, int n_min,
                                    int n_max, std::ostream& log,
                                    const Rational& band = Rational(1, 1000000),
                                    double tolerance = kNptTol);

/// Certificate pipeline: MK violation of the bound-entangled construction
/// iff N >= 6 (checked for N in 3..20 against the exact integer inequality
/// 2^(N-1) > (N-1)^2), undistillable set == j_set and pair blocking per its
/// enumerated fixture for N in 3..12, plus the N = 6 dense cross-checks.
SuiteOutcome run_theorem2_suite(std::ostream& log);

/// Forward direction at small N: every MK-violating state with
/// N in {3, 4, 5} has at least one distillable pair.
SuiteOutcome run_pair_search_suite(std::uint64_t seed, int trials_per_n, std::ostream& log);

}  // namespace mkbell

#endif  // MKBELL_VERIFY_HPP
