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

#include "mkbell/verify.hpp"

#include <cmath>
#include <ostream>

#include "mkbell/bec.hpp"
#include "mkbell/bell.hpp"
#include "mkbell/report.hpp"
#include "mkbell/splits.hpp"
#include "mkbell/state_io.hpp"

namespace mkbell {

namespace {

// Independent per-(N, trial) seed stream.
std::uint64_t trial_seed(std::uint64_t seed, int n, int trial) {
    std::uint64_t x = seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n) +
                              static_cast<std::uint64_t>(trial));
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    return x;
}

bool off_boundary(const LambdaState& state, const Rational& band) {
    const Rational delta = state.delta();
    if (delta <= band) return false;  // covers the absent-key gap |0 - delta|
    for (const auto& [j, value] : state.lambdas()) {
        const Rational gap = 2 * value - delta;
        if (gap <= band && gap >= -band) return false;
    }
    return true;
}

void dump_state(std::ostream& log, const LambdaState& state) {
    log << state_to_json(state);
}

}  // namespace

SuiteOutcome run_bound_suite(std::uint64_t seed, int trials_per_n, int n_min, int n_max,
                             std::ostream& log) {
    SuiteOutcome outcome;
    for (int n = n_min; n <= n_max; ++n) {
        const std::uint64_t bound = min_distillable_bound(n);
        for (int trial = 0; trial < trials_per_n; ++trial) {
            const LambdaState state = random_violating_state(n, trial_seed(seed, n, trial));
            ++outcome.trials;
            const SplitReport report = enumerate_distillable(state);
            if (report.distillable_count < bound) {
                ++outcome.failures;
                log << "bound violation at N=" << n << " trial=" << trial << ": count "
                    << report.distillable_count << " < bound " << bound << "\n";
                dump_state(log, state);
            }
        }
    }
    log << "bound suite: " << outcome.trials << " violating states, " << outcome.failures
        << " failures\n";
    return outcome;
}

SuiteOutcome run_prop1_oracle_suite(std::uint64_t seed, int trials_per_n, int n_min,
                                    int n_max, std::ostream& log, const Rational& band,
                                    double tolerance) {
    SuiteOutcome outcome;
    for (int n = n_min; n <= n_max; ++n) {
        for (int trial = 0; trial < trials_per_n; ++trial) {
            // Redraw until the state is clear of the criterion boundary;
            // each redraw is reported as a skip.
            LambdaState state = random_family_state(n, trial_seed(seed, n, trial),
                                                    Rational(0));
            int redraw = 0;
            while (!off_boundary(state, band)) {
                ++outcome.skips;
                ++redraw;
                state = random_family_state(
                    n, trial_seed(seed ^ 0x5bf03635ULL, n, trial * 1024 + redraw),
                    Rational(0));
            }
            ++outcome.trials;

            const DenseOperator rho = densify(state);
            for (std::uint64_t j = 1; j <= total_splits(n); ++j) {
                const bool criterion = is_split_distillable(state, j);
                const PtClass cls = is_npt(rho, split_from_index(n, j), tolerance);
                if ((cls == PtClass::Npt) != criterion) {
                    ++outcome.failures;
                    log << "oracle disagreement at N=" << n << " trial=" << trial
                        << " split=" << j << ": criterion says "
                        << (criterion ? "distillable" : "undistillable") << ", oracle "
                        << pt_class_name(cls) << "\n";
                    dump_state(log, state);
                }
            }
        }
    }
    log << "prop1-oracle suite: " << outcome.trials << " states, " << outcome.failures
        << " disagreements, " << outcome.skips << " boundary-band skips\n";
    return outcome;
}

SuiteOutcome run_theorem2_suite(std::ostream& log) {
    SuiteOutcome outcome;
    auto fail = [&](const std::string& message) {
        ++outcome.failures;
        log << "theorem2: " << message << "\n";
    };

    for (int n = 3; n <= 20; ++n) {
        ++outcome.trials;
        const BeCertificate cert = certify(n);

        // Violation iff N >= 6; equivalently 2^(N-1) > (N-1)^2 for
        // delta = 1/(N-1).
        const bool expect_violation = n >= 6;
        const BigInt dim = BigInt(1) << (n - 1);
        const bool integer_check = dim > BigInt(n - 1) * BigInt(n - 1);
        if (integer_check != expect_violation) {
            fail("integer inequality disagrees with the N >= 6 cutoff at N=" +
                 std::to_string(n));
        }
        if (cert.mk_violated != expect_violation) {
            fail("certificate violation flag wrong at N=" + std::to_string(n));
        }
        if (cert.verdict !=
            (expect_violation ? Verdict::BoundEntangledViolating : Verdict::NotViolating)) {
            fail("unexpected verdict " + verdict_name(cert.verdict) + " at N=" +
                 std::to_string(n));
        }

        if (n <= 12) {
            if (cert.undistillable_splits != j_set(n)) {
                fail("undistillable splits differ from J_N at N=" + std::to_string(n));
            }
            // Pair blocking holds for N >= 4; at N = 3 enumeration shows the
            // pair (1,2) is separated by no element of J_3 = {3}.
            const bool expect_blocked = n >= 4;
            if (cert.all_pairs_blocked != expect_blocked) {
                fail("pair blocking at N=" + std::to_string(n) + " is " +
                     (cert.all_pairs_blocked ? "true" : "false") + ", expected " +
                     (expect_blocked ? "true" : "false"));
            }
        }
        if (n == 6) {
            const double expected = std::exp2(2.5) / 5.0;
            if (std::abs(cert.mk_value - expected) > 1e-12) {
                fail("N=6 MK value differs from 2^(5/2)/5");
            }
            const SplitReport report = enumerate_distillable(be_state(6));
            if (report.distillable_count != 27 || report.bound != 27) {
                fail("N=6 distillable count/bound differ from 27");
            }
            if (cert.witness_kind != WitnessKind::DenseNpt || !cert.witness_split) {
                fail("N=6 certificate lacks a dense NPT witness");
            }
        }
    }
    log << "theorem2 suite: " << outcome.trials << " certificates, " << outcome.failures
        << " failures\n";
    return outcome;
}

SuiteOutcome run_pair_search_suite(std::uint64_t seed, int trials_per_n, std::ostream& log) {
    SuiteOutcome outcome;
    for (int n = 3; n <= 5; ++n) {
        for (int trial = 0; trial < trials_per_n; ++trial) {
            const LambdaState state = random_violating_state(n, trial_seed(seed, n, trial));
            ++outcome.trials;
            if (!find_distillable_pair(state)) {
                ++outcome.failures;
                log << "no distillable pair for violating state at N=" << n << " trial="
                    << trial << "\n";
                dump_state(log, state);
            }
        }
    }
    log << "pair-search suite: " << outcome.trials << " violating states, "
        << outcome.failures << " failures\n";
    return outcome;
}

}  // namespace mkbell
