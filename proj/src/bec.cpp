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

#include "mkbell/bec.hpp"

#include "mkbell/bell.hpp"
#include "mkbell/dense.hpp"
#include "mkbell/errors.hpp"
#include "mkbell/splits.hpp"

namespace mkbell {

std::string verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::BoundEntangledViolating: return "BoundEntangledViolating";
        case Verdict::NotViolating: return "NotViolating";
        case Verdict::Distillable: return "Distillable";
    }
    return "?";
}

std::string witness_kind_name(WitnessKind kind) {
    return kind == WitnessKind::DenseNpt ? "dense-npt" : "criterion";
}

std::vector<std::uint64_t> j_set(int n_qubits) {
    if (n_qubits < 3) {
        throw IndexRangeError("j_set requires N >= 3");
    }
    std::vector<std::uint64_t> out;
    out.reserve(n_qubits - 2);
    for (int m = 0; m <= n_qubits - 3; ++m) {
        out.push_back(std::uint64_t{3} << m);
    }
    return out;
}

LambdaState be_state(int n_qubits) {
    const auto indices = j_set(n_qubits);  // also validates N >= 3
    const Rational weight(BigInt(1), BigInt(2) * BigInt(n_qubits - 1));
    std::map<std::uint64_t, Rational> lambdas;
    for (const auto j : indices) {
        lambdas.emplace(j, weight);
    }
    return LambdaState(n_qubits, Rational(BigInt(1), BigInt(n_qubits - 1)), Rational(0),
                       std::move(lambdas));
}

bool verify_pair_blocking(int n_qubits) {
    const auto blockers = j_set(n_qubits);
    for (int k = 1; k < n_qubits; ++k) {
        for (int k_prime = k + 1; k_prime <= n_qubits; ++k_prime) {
            bool blocked = false;
            for (const auto j : blockers) {
                if (split_separates(n_qubits, j, k, k_prime)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) return false;
        }
    }
    return true;
}

BeCertificate certify(int n_qubits) {
    const LambdaState state = be_state(n_qubits);

    BeCertificate cert;
    cert.n_qubits = n_qubits;
    const MkValueResult mk = mk_value(state);
    cert.mk_value = mk.value;
    cert.mk_violated = mk.violated;

    const SplitReport report = enumerate_distillable(state);
    cert.undistillable_splits = report.undistillable;
    cert.all_pairs_blocked = verify_pair_blocking(n_qubits);

    // Inseparability witness: any NPT split suffices. All splits off the
    // j_set boundary are NPT, so the first one found settles it; above the
    // eigensolver cap the criterion itself is the (weaker) certificate.
    cert.witness_kind = WitnessKind::Criterion;
    if (n_qubits <= dense_cap() && n_qubits <= kEigenCap) {
        const DenseOperator rho = densify(state);
        for (std::uint64_t j = 1; j <= total_splits(n_qubits); ++j) {
            if (is_npt(rho, split_from_index(n_qubits, j)) == PtClass::Npt) {
                cert.witness_kind = WitnessKind::DenseNpt;
                cert.witness_split = j;
                break;
            }
        }
    }

    if (!cert.mk_violated) {
        cert.verdict = Verdict::NotViolating;
    } else if (cert.all_pairs_blocked) {
        cert.verdict = Verdict::BoundEntangledViolating;
    } else {
        cert.verdict = Verdict::Distillable;
    }
    return cert;
}

}  // namespace mkbell
