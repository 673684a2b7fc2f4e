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

#ifndef MKBELL_STATE_IO_HPP
#define MKBELL_STATE_IO_HPP

#include <string>

#include "mkbell/family.hpp"

namespace mkbell {

// State files carry the coefficients as exact rational strings so that
// boundary classifications survive a round trip:
//
//   {
//     "schema_version": 1,
//     "n_qubits": 6,
//     "lambda0_plus": "1/5",
//     "lambda0_minus": "0",
//     "lambdas": { "3": "1/10", "6": "1/10", "12": "1/10", "24": "1/10" }
//   }
//
// The canonical form (what state_to_json emits) has rationals in lowest
// terms, lambdas keyed in ascending numeric order, two-space indentation
// and a trailing newline; parsing then re-serializing a canonical file is
// byte-identical.

inline constexpr int kStateSchemaVersion = 1;

/// Parses a state file. Throws ParseError on malformed JSON, unknown or
/// missing fields, bad rationals; state validation errors propagate.
LambdaState state_from_json(const std::string& text);

/// Canonical serialization, see above.
std::string state_to_json(const LambdaState& state);

/// Throws ParseError when the file cannot be opened.
LambdaState read_state_file(const std::string& path);

/// Throws Error on I/O failure.
void write_state_file(const LambdaState& state, const std::string& path);

}  // namespace mkbell

#endif  // MKBELL_STATE_IO_HPP
