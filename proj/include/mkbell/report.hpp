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

#ifndef MKBELL_REPORT_HPP
#define MKBELL_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mkbell/bec.hpp"
#include "mkbell/bell.hpp"
#include "mkbell/dense.hpp"
#include "mkbell/splits.hpp"

namespace mkbell {

inline constexpr int kReportSchemaVersion = 1;

/// Index lists longer than this are omitted from reports (replaced by an
/// `_omitted` marker) so that sparse large-N analyses stay small on disk.
inline constexpr std::uint64_t kReportListCap = 65536;

struct DenseOracleRow {
    std::uint64_t split = 0;
    double min_eigenvalue = 0.0;
    PtClass classification = PtClass::Indeterminate;
    bool criterion_distillable = false;
    bool agree = false;
};

struct AnalysisOptions {
    bool dense_oracle = false;
    double tolerance = kNptTol;
};

/// Everything the `analyze` command reports about one state.
struct Analysis {
    int n_qubits = 0;
    MkValueResult mk;
    SplitReport splits;
    std::vector<std::pair<int, int>> blocked_pairs;       // lexicographic
    std::optional<std::pair<int, int>> distillable_pair;  // lexicographically first
    bool all_pairs_blocked = false;
    std::vector<DenseOracleRow> oracle_rows;              // dense_oracle only
    bool oracle_all_agree = true;
};

/// Runs the full criteria pipeline; with options.dense_oracle also runs the
/// partial-transpose classification per split (throws DimensionCapError
/// above the eigensolver cap).
Analysis analyze_state(const LambdaState& state, const AnalysisOptions& options = {});

std::string pt_class_name(PtClass cls);

/// Machine-readable report (JSON text, trailing newline, deterministic).
std::string analysis_to_json(const Analysis& analysis,
                             const AnalysisOptions& options = {});

/// Report for the `be` command: certificate block plus the standard
/// analysis blocks of the underlying state.
std::string certificate_to_json(const BeCertificate& certificate,
                                const Analysis& analysis);

/// CSV table "N,bound,total_splits,p_lower_bound" for N = 3..n_max, with
/// the probability bound printed to 12 significant digits, LF line endings.
std::string render_table_csv(int n_max);

}  // namespace mkbell

#endif  // MKBELL_REPORT_HPP
