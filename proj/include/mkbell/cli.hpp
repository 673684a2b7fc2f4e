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

#ifndef MKBELL_CLI_HPP
#define MKBELL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mkbell::cli {

// Exit-code contract, kept scriptable:
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitIoError = 4;

struct AnalyzeArgs {
    std::string input_path;
    bool dense_oracle = false;
    double tolerance = 1e-9;
    std::string output_path;  // empty: report to stdout
};

struct BeArgs {
    int n_qubits = 0;
    std::string state_path;   // empty: be_state_<N>.json
    std::string report_path;  // empty: be_report_<N>.json
};

struct TableArgs {
    int n_max = 0;
    std::string output_path;  // empty: CSV to stdout
};

struct VerifyArgs {
    std::string suite;  // one of: prop1-oracle, bound, theorem2
    std::uint64_t seed = 20260809;
    int trials = 0;  // 0: per-suite default
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_be(const BeArgs& args, std::ostream& out, std::ostream& err);
int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace mkbell::cli

#endif  // MKBELL_CLI_HPP
