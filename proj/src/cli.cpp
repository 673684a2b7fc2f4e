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

#include "mkbell/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>

#include "mkbell/bec.hpp"
#include "mkbell/errors.hpp"
#include "mkbell/report.hpp"
#include "mkbell/state_io.hpp"
#include "mkbell/verify.hpp"

namespace mkbell::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const DimensionCapError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const IndexRangeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NormalizationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NegativeCoefficientError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw Error("failed writing '" + path + "'");
    }
}

void emit(const std::string& content, const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
        fallback << content;
    } else {
        write_text_file(path, content);
    }
}

}  // namespace

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LambdaState state = read_state_file(args.input_path);
        AnalysisOptions options;
        options.dense_oracle = args.dense_oracle;
        options.tolerance = args.tolerance;
        const Analysis analysis = analyze_state(state, options);
        emit(analysis_to_json(analysis, options), args.output_path, out);
        return kExitOk;
    });
}

int cmd_be(const BeArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LambdaState state = be_state(args.n_qubits);  // validates N >= 3
        const BeCertificate certificate = certify(args.n_qubits);
        const Analysis analysis = analyze_state(state);

        const std::string state_path = args.state_path.empty()
                                           ? "be_state_" + std::to_string(args.n_qubits) + ".json"
                                           : args.state_path;
        const std::string report_path =
            args.report_path.empty() ? "be_report_" + std::to_string(args.n_qubits) + ".json"
                                     : args.report_path;
        write_state_file(state, state_path);
        write_text_file(report_path, certificate_to_json(certificate, analysis));

        out << "N=" << args.n_qubits << " verdict=" << verdict_name(certificate.verdict)
            << " mk_value=" << certificate.mk_value << "\n";
        out << "wrote " << state_path << " and " << report_path << "\n";
        return kExitOk;
    });
}

int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        emit(render_table_csv(args.n_max), args.output_path, out);
        return kExitOk;
    });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SuiteOutcome outcome;
        if (args.suite == "bound") {
            const int trials = args.trials > 0 ? args.trials : 500;
            outcome = run_bound_suite(args.seed, trials, 3, 10, out);
        } else if (args.suite == "prop1-oracle") {
            const int trials = args.trials > 0 ? args.trials : 200;
            outcome = run_prop1_oracle_suite(args.seed, trials, 2, 6, out);
        } else if (args.suite == "theorem2") {
            outcome = run_theorem2_suite(out);
        } else {
            err << "error: unknown suite '" << args.suite
                << "' (expected prop1-oracle, bound or theorem2)\n";
            return kExitInputError;
        }
        return outcome.passed() ? kExitOk : kExitPropertyFailure;
    });
}

}  // namespace mkbell::cli
