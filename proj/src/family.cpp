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

#include "mkbell/family.hpp"

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "mkbell/bell.hpp"
#include "mkbell/errors.hpp"

namespace mkbell {

namespace {

// 2^(N-1)+1 simplex coordinates; beyond this the sampler would have to
// materialize hundreds of millions of rationals.
constexpr int kSamplerCap = 20;

// Highest N for which split indices fit comfortably in uint64.
constexpr int kIndexBits = 62;

// Uniform double in [0, 1) from the standardized mt19937_64 output stream;
// avoids std::uniform_real_distribution, whose mapping is
// implementation-defined.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double exponential(std::mt19937_64& rng) {
    return -std::log1p(-uniform01(rng));
}

}  // namespace

LambdaState::LambdaState(int n_qubits, Rational lambda0_plus, Rational lambda0_minus,
                         std::map<std::uint64_t, Rational> lambdas)
    : n_qubits_(n_qubits),
      lambda0_plus_(std::move(lambda0_plus)),
      lambda0_minus_(std::move(lambda0_minus)),
      lambdas_(std::move(lambdas)) {
    if (n_qubits_ < 2 || n_qubits_ > kIndexBits) {
        throw IndexRangeError("n_qubits must be in [2, " + std::to_string(kIndexBits) +
                              "], got " + std::to_string(n_qubits_));
    }
    if (lambda0_plus_ < 0 || lambda0_minus_ < 0) {
        throw NegativeCoefficientError("lambda0 coefficients must be non-negative");
    }
    const std::uint64_t top = max_index();
    Rational tail_sum(0);
    for (auto it = lambdas_.begin(); it != lambdas_.end();) {
        const auto& [j, value] = *it;
        if (j < 1 || j > top) {
            throw IndexRangeError("lambda index " + std::to_string(j) +
                                  " outside [1, " + std::to_string(top) + "]");
        }
        if (value < 0) {
            throw NegativeCoefficientError("lambda_" + std::to_string(j) + " is negative");
        }
        if (value == 0) {
            it = lambdas_.erase(it);  // keep the map canonical: absent means zero
            continue;
        }
        tail_sum += value;
        ++it;
    }
    const Rational total = lambda0_plus_ + lambda0_minus_ + 2 * tail_sum;
    if (total != 1) {
        throw NormalizationError("coefficients sum to " + format_rational(total) +
                                 ", expected 1");
    }
}

Rational LambdaState::lambda(std::uint64_t j) const {
    if (j < 1 || j > max_index()) {
        throw IndexRangeError("lambda index " + std::to_string(j) + " out of range");
    }
    const auto it = lambdas_.find(j);
    return it == lambdas_.end() ? Rational(0) : it->second;
}

std::uint64_t LambdaState::max_index() const {
    return (std::uint64_t{1} << (n_qubits_ - 1)) - 1;
}

LambdaState ghz_state(int n_qubits) {
    return LambdaState(n_qubits, Rational(1), Rational(0), {});
}

LambdaState random_family_state(int n_qubits, std::uint64_t seed,
                                const std::optional<Rational>& min_delta,
                                int rejection_budget) {
    if (n_qubits < 2) {
        throw IndexRangeError("n_qubits must be >= 2");
    }
    if (n_qubits > kSamplerCap) {
        throw DimensionCapError("simplex sampler capped at N <= " +
                                std::to_string(kSamplerCap));
    }
    const std::uint64_t slots = (std::uint64_t{1} << (n_qubits - 1)) - 1;
    const std::size_t coords = static_cast<std::size_t>(slots) + 2;

    std::mt19937_64 rng(seed);
    std::vector<double> weights(coords);
    for (int attempt = 0; attempt < rejection_budget; ++attempt) {
        double sum = 0.0;
        for (auto& w : weights) {
            w = exponential(rng);
            sum += w;
        }
        std::vector<std::int64_t> ticks(coords);
        std::int64_t tick_sum = 0;
        for (std::size_t i = 0; i < coords; ++i) {
            ticks[i] = std::llround(weights[i] / sum *
                                    static_cast<double>(kQuantizationDenominator));
            tick_sum += ticks[i];
        }
        if (tick_sum <= 0) continue;

        const Rational total(BigInt(tick_sum), BigInt(1));
        Rational l0p = Rational(BigInt(ticks[0]), BigInt(1)) / total;
        Rational l0m = Rational(BigInt(ticks[1]), BigInt(1)) / total;
        std::map<std::uint64_t, Rational> lambdas;
        for (std::uint64_t j = 1; j <= slots; ++j) {
            const std::int64_t t = ticks[static_cast<std::size_t>(j) + 1];
            if (t > 0) {
                lambdas.emplace(j, Rational(BigInt(t), BigInt(2) * BigInt(tick_sum)));
            }
        }
        LambdaState state(n_qubits, std::move(l0p), std::move(l0m), std::move(lambdas));
        if (!min_delta || state.delta() > *min_delta) {
            return state;
        }
    }
    throw SamplingTimeoutError("no sample with delta > " +
                               (min_delta ? format_rational(*min_delta) : std::string("?")) +
                               " within " + std::to_string(rejection_budget) + " attempts");
}

LambdaState random_violating_state(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 2 || n_qubits > kIndexBits) {
        throw IndexRangeError("n_qubits must be in [2, " + std::to_string(kIndexBits) + "]");
    }
    const std::uint64_t slots = (std::uint64_t{1} << (n_qubits - 1)) - 1;
    const double threshold = std::exp2(-0.5 * (n_qubits - 1));

    std::mt19937_64 rng(seed);
    for (;;) {
        // Delta uniform over the violating interval, snapped to the grid and
        // re-checked exactly: Delta^2 * 2^(N-1) > 1.
        const Rational delta = quantize(threshold + uniform01(rng) * (1.0 - threshold));
        if (!(delta * delta * pow2_rational(n_qubits - 1) > 1) || delta > 1) continue;

        Rational l0m = quantize(uniform01(rng) * 0.5 * (1.0 - to_double(delta)));
        const Rational l0m_max = (1 - delta) / 2;
        if (l0m > l0m_max) l0m = l0m_max;
        const Rational l0p = delta + l0m;

        const Rational remainder = 1 - l0p - l0m;  // exact mass left for 2*sum lambda_j
        std::map<std::uint64_t, Rational> lambdas;
        if (remainder > 0) {
            // Half the time spread over everything, half the time concentrate
            // on a few indices so that 2*lambda_j lands at or above delta.
            std::uint64_t support;
            if (uniform01(rng) < 0.5 && n_qubits <= kSamplerCap) {
                support = slots;
            } else {
                const std::uint64_t cap =
                    std::min<std::uint64_t>(slots, 4 * static_cast<std::uint64_t>(n_qubits));
                support = 1 + static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(cap));
                if (support > cap) support = cap;
            }

            std::set<std::uint64_t> indices;
            if (support == slots) {
                for (std::uint64_t j = 1; j <= slots; ++j) indices.insert(j);
            } else {
                while (indices.size() < support) {
                    const auto j =
                        1 + static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(slots));
                    indices.insert(std::min(j, slots));
                }
            }

            std::vector<std::int64_t> ticks;
            ticks.reserve(indices.size());
            double sum = 0.0;
            std::vector<double> raw(indices.size());
            for (auto& r : raw) {
                r = exponential(rng);
                sum += r;
            }
            std::int64_t tick_sum = 0;
            for (const double r : raw) {
                const auto t = std::llround(r / sum * static_cast<double>(kQuantizationDenominator));
                ticks.push_back(t);
                tick_sum += t;
            }
            if (tick_sum <= 0) continue;
            // 2*lambda_j = remainder * ticks/tick_sum keeps the total exact.
            std::size_t pos = 0;
            for (const std::uint64_t j : indices) {
                if (ticks[pos] > 0) {
                    lambdas.emplace(j, remainder * Rational(BigInt(ticks[pos]), BigInt(1)) /
                                           (2 * Rational(BigInt(tick_sum), BigInt(1))));
                }
                ++pos;
            }
        }
        LambdaState state(n_qubits, l0p, l0m, std::move(lambdas));
        if (violates_mk(state)) {
            return state;
        }
    }
}

}  // namespace mkbell
