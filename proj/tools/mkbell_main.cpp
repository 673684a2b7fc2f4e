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

#include <iostream>

#include <CLI11.hpp>

#include "mkbell/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Mermin-Klyshko violation and bipartite distillability toolkit"};
    app.require_subcommand(1);

    mkbell::cli::AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "Analyze a state file: MK value, distillable splits, pair blocking");
    analyze->add_option("input", analyze_args.input_path, "state JSON file")->required();
    analyze->add_flag("--dense-oracle", analyze_args.dense_oracle,
                      "cross-check every split against the partial-transpose oracle");
    analyze->add_option("--tolerance", analyze_args.tolerance,
                        "NPT classification band (default 1e-9)");
    analyze->add_option("-o,--output", analyze_args.output_path,
                        "report path (default: stdout)");

    mkbell::cli::BeArgs be_args;
    auto* be = app.add_subcommand(
        "be", "Emit the N-qubit bound-entangled candidate state and its certificate");
    be->add_option("n", be_args.n_qubits, "qubit count (>= 3)")->required();
    be->add_option("--state-out", be_args.state_path, "state file path");
    be->add_option("--report-out", be_args.report_path, "certificate report path");

    mkbell::cli::TableArgs table_args;
    auto* table = app.add_subcommand(
        "table", "CSV of the guaranteed distillable-split count and probability bound per N");
    table->add_option("n_max", table_args.n_max, "last row (>= 3)")->required();
    table->add_option("-o,--output", table_args.output_path, "CSV path (default: stdout)");

    mkbell::cli::VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run a randomized verification suite");
    verify->add_option("suite", verify_args.suite, "prop1-oracle | bound | theorem2")
        ->required();
    verify->add_option("--seed", verify_args.seed, "RNG seed");
    verify->add_option("--trials", verify_args.trials, "trials per qubit count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // CLI11's help/version paths return 0; everything else is bad input.
        return code == 0 ? 0 : mkbell::cli::kExitInputError;
    }

    if (analyze->parsed()) return mkbell::cli::cmd_analyze(analyze_args, std::cout, std::cerr);
    if (be->parsed()) return mkbell::cli::cmd_be(be_args, std::cout, std::cerr);
    if (table->parsed()) return mkbell::cli::cmd_table(table_args, std::cout, std::cerr);
    if (verify->parsed()) return mkbell::cli::cmd_verify(verify_args, std::cout, std::cerr);
    return mkbell::cli::kExitInputError;
}
