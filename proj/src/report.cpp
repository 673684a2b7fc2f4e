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

#include "mkbell/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "mkbell/errors.hpp"

namespace mkbell {

namespace {

nlohmann::ordered_json mk_block(const MkValueResult& mk) {
    return {{"value", mk.value}, {"violated", mk.violated}, {"threshold", mk.threshold}};
}

nlohmann::ordered_json splits_block(const SplitReport& report) {
    nlohmann::ordered_json block;
    block["total"] = report.total;
    block["count"] = report.distillable_count;
    block["bound"] = report.bound;
    block["probability_bound"] = report.probability_bound;
    if (report.none_distillable) {
        block["all_undistillable"] = true;
        block["distillable"] = nlohmann::ordered_json::array();
    } else {
        if (report.undistillable.size() <= kReportListCap) {
            block["undistillable"] = report.undistillable;
        } else {
            block["undistillable_omitted"] = true;
        }
        if (report.distillable_count <= kReportListCap) {
            block["distillable"] = distillable_indices(report);
        } else {
            block["distillable_omitted"] = true;
        }
    }
    return block;
}

nlohmann::ordered_json pairs_block(const Analysis& analysis) {
    nlohmann::ordered_json block;
    block["all_blocked"] = analysis.all_pairs_blocked;
    auto blocked = nlohmann::ordered_json::array();
    for (const auto& [k, kp] : analysis.blocked_pairs) {
        blocked.push_back({k, kp});
    }
    block["blocked"] = std::move(blocked);
    if (analysis.distillable_pair) {
        block["distillable_pair"] = {analysis.distillable_pair->first,
                                     analysis.distillable_pair->second};
    } else {
        block["distillable_pair"] = nullptr;
    }
    return block;
}

std::string format_significant(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

}  // namespace

Analysis analyze_state(const LambdaState& state, const AnalysisOptions& options) {
    Analysis analysis;
    analysis.n_qubits = state.n_qubits();
    analysis.mk = mk_value(state);
    analysis.splits = enumerate_distillable(state);

    const int n = state.n_qubits();
    for (int k = 1; k < n; ++k) {
        for (int kp = k + 1; kp <= n; ++kp) {
            if (is_pair_distillable(state, k, kp)) {
                if (!analysis.distillable_pair) {
                    analysis.distillable_pair = std::make_pair(k, kp);
                }
            } else {
                analysis.blocked_pairs.emplace_back(k, kp);
            }
        }
    }
    analysis.all_pairs_blocked = !analysis.distillable_pair.has_value();

    if (options.dense_oracle) {
        const DenseOperator rho = densify(state);
        for (std::uint64_t j = 1; j <= analysis.splits.total; ++j) {
            DenseOracleRow row;
            row.split = j;
            const Split split = split_from_index(n, j);
            row.min_eigenvalue = min_pt_eigenvalue(rho, split);
            if (row.min_eigenvalue < -options.tolerance) {
                row.classification = PtClass::Npt;
            } else if (row.min_eigenvalue <= options.tolerance) {
                row.classification = PtClass::Indeterminate;
            } else {
                row.classification = PtClass::Ppt;
            }
            row.criterion_distillable = is_split_distillable(state, j);
            row.agree = (row.classification == PtClass::Npt) == row.criterion_distillable;
            analysis.oracle_all_agree = analysis.oracle_all_agree && row.agree;
            analysis.oracle_rows.push_back(row);
        }
    }
    return analysis;
}

std::string pt_class_name(PtClass cls) {
    switch (cls) {
        case PtClass::Npt: return "NPT";
        case PtClass::Ppt: return "PPT";
        case PtClass::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::string analysis_to_json(const Analysis& analysis, const AnalysisOptions& options) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["n_qubits"] = analysis.n_qubits;
    doc["mk"] = mk_block(analysis.mk);
    doc["splits"] = splits_block(analysis.splits);
    doc["pairs"] = pairs_block(analysis);
    if (options.dense_oracle) {
        nlohmann::ordered_json oracle;
        oracle["tolerance"] = options.tolerance;
        oracle["all_agree"] = analysis.oracle_all_agree;
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : analysis.oracle_rows) {
            rows.push_back({{"split", row.split},
                            {"min_eigenvalue", row.min_eigenvalue},
                            {"classification", pt_class_name(row.classification)},
                            {"criterion_distillable", row.criterion_distillable},
                            {"agree", row.agree}});
        }
        oracle["splits"] = std::move(rows);
        doc["dense_oracle"] = std::move(oracle);
    }
    return doc.dump(2) + "\n";
}

std::string certificate_to_json(const BeCertificate& certificate, const Analysis& analysis) {
    nlohmann::ordered_json cert;
    cert["verdict"] = verdict_name(certificate.verdict);
    cert["mk_value"] = certificate.mk_value;
    cert["mk_violated"] = certificate.mk_violated;
    cert["undistillable_splits"] = certificate.undistillable_splits;
    cert["all_pairs_blocked"] = certificate.all_pairs_blocked;
    nlohmann::ordered_json witness;
    witness["kind"] = witness_kind_name(certificate.witness_kind);
    if (certificate.witness_split) {
        witness["split"] = *certificate.witness_split;
    }
    cert["witness"] = std::move(witness);

    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["n_qubits"] = certificate.n_qubits;
    doc["certificate"] = std::move(cert);
    doc["mk"] = mk_block(analysis.mk);
    doc["splits"] = splits_block(analysis.splits);
    doc["pairs"] = pairs_block(analysis);
    return doc.dump(2) + "\n";
}

std::string render_table_csv(int n_max) {
    if (n_max < 3) {
        throw IndexRangeError("table requires n_max >= 3");
    }
    std::string csv = "N,bound,total_splits,p_lower_bound\n";
    for (int n = 3; n <= n_max; ++n) {
        csv += std::to_string(n);
        csv += ",";
        csv += std::to_string(min_distillable_bound(n));
        csv += ",";
        csv += std::to_string(total_splits(n));
        csv += ",";
        csv += format_significant(distillation_probability_bound(n));
        csv += "\n";
    }
    return csv;
}

}  // namespace mkbell
