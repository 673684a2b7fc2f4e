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

#include "mkbell/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mkbell/errors.hpp"

namespace mkbell {

namespace {

std::uint64_t parse_index_key(const std::string& key) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("lambda key '" + key + "' is not a decimal index");
    }
    try {
        return std::stoull(key);
    } catch (const std::exception&) {
        throw ParseError("lambda key '" + key + "' does not fit an index");
    }
}

}  // namespace

LambdaState state_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("state file must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "schema_version" && key != "n_qubits" && key != "lambda0_plus" &&
            key != "lambda0_minus" && key != "lambdas") {
            throw ParseError("unknown field '" + key + "'");
        }
    }
    for (const char* field : {"schema_version", "n_qubits", "lambda0_plus",
                              "lambda0_minus", "lambdas"}) {
        if (!doc.contains(field)) {
            throw ParseError(std::string("missing field '") + field + "'");
        }
    }
    if (!doc["schema_version"].is_number_integer() ||
        doc["schema_version"].get<int>() != kStateSchemaVersion) {
        throw ParseError("unsupported schema_version");
    }
    if (!doc["n_qubits"].is_number_integer()) {
        throw ParseError("n_qubits must be an integer");
    }
    if (!doc["lambda0_plus"].is_string() || !doc["lambda0_minus"].is_string() ||
        !doc["lambdas"].is_object()) {
        throw ParseError("coefficients must be rational strings and lambdas an object");
    }

    const int n = doc["n_qubits"].get<int>();
    std::map<std::uint64_t, Rational> lambdas;
    for (const auto& [key, value] : doc["lambdas"].items()) {
        if (!value.is_string()) {
            throw ParseError("lambda value for key '" + key + "' must be a rational string");
        }
        lambdas.emplace(parse_index_key(key), parse_rational(value.get<std::string>()));
    }
    return LambdaState(n, parse_rational(doc["lambda0_plus"].get<std::string>()),
                       parse_rational(doc["lambda0_minus"].get<std::string>()),
                       std::move(lambdas));
}

std::string state_to_json(const LambdaState& state) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kStateSchemaVersion;
    doc["n_qubits"] = state.n_qubits();
    doc["lambda0_plus"] = format_rational(state.lambda0_plus());
    doc["lambda0_minus"] = format_rational(state.lambda0_minus());
    auto lambdas = nlohmann::ordered_json::object();
    // std::map iterates in ascending numeric order, which is the canonical
    // key order of the file.
    for (const auto& [j, value] : state.lambdas()) {
        lambdas[std::to_string(j)] = format_rational(value);
    }
    doc["lambdas"] = std::move(lambdas);
    return doc.dump(2) + "\n";
}

LambdaState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open state file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return state_from_json(buffer.str());
}

void write_state_file(const LambdaState& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << state_to_json(state);
    if (!out) {
        throw Error("failed writing state file '" + path + "'");
    }
}

}  // namespace mkbell
