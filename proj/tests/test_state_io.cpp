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

#include <doctest.h>

#include <cstdint>
#include <string>

#include "mkbell/bec.hpp"
#include "mkbell/errors.hpp"
#include "mkbell/report.hpp"
#include "mkbell/state_io.hpp"

using namespace mkbell;

TEST_CASE("canonical state files round-trip byte-identically") {
    for (const int n : {3, 6, 9}) {
        const std::string once = state_to_json(be_state(n));
        const std::string twice = state_to_json(state_from_json(once));
        CHECK(once == twice);
    }
    std::uint64_t seed = 42;
    for (int trial = 0; trial < 20; ++trial) {
        const LambdaState state = random_family_state(5, seed++);
        const std::string text = state_to_json(state);
        CHECK(state_from_json(text) == state);
        CHECK(state_to_json(state_from_json(text)) == text);
    }
}

TEST_CASE("parsing accepts the documented schema") {
    const std::string text = R"({
  "schema_version": 1,
  "n_qubits": 6,
  "lambda0_plus": "1/5",
  "lambda0_minus": "0",
  "lambdas": { "3": "1/10", "6": "1/10", "12": "1/10", "24": "1/10" }
})";
    const LambdaState state = state_from_json(text);
    CHECK(state == be_state(6));
}

TEST_CASE("parsing rejects malformed input") {
    SUBCASE("zero denominator") {
        CHECK_THROWS_AS(state_from_json(R"({"schema_version":1,"n_qubits":3,
            "lambda0_plus":"1/0","lambda0_minus":"0","lambdas":{}})"),
                        ParseError);
    }
    SUBCASE("unknown field") {
        CHECK_THROWS_AS(state_from_json(R"({"schema_version":1,"n_qubits":3,
            "lambda0_plus":"1","lambda0_minus":"0","lambdas":{},"extra":1})"),
                        ParseError);
    }
    SUBCASE("missing field") {
        CHECK_THROWS_AS(state_from_json(R"({"schema_version":1,"n_qubits":3,
            "lambda0_plus":"1","lambdas":{}})"),
                        ParseError);
    }
    SUBCASE("wrong schema version") {
        CHECK_THROWS_AS(state_from_json(R"({"schema_version":2,"n_qubits":3,
            "lambda0_plus":"1","lambda0_minus":"0","lambdas":{}})"),
                        ParseError);
    }
    SUBCASE("non-numeric lambda key") {
        CHECK_THROWS_AS(state_from_json(R"({"schema_version":1,"n_qubits":3,
            "lambda0_plus":"1","lambda0_minus":"0","lambdas":{"x":"0"}})"),
                        ParseError);
    }
    SUBCASE("not JSON at all") {
        CHECK_THROWS_AS(state_from_json("N=6 delta=1/5"), ParseError);
    }
    SUBCASE("state-level validation propagates") {
        CHECK_THROWS_AS(state_from_json(R"({"schema_version":1,"n_qubits":3,
            "lambda0_plus":"1/2","lambda0_minus":"0","lambdas":{"1":"1/2"}})"),
                        NormalizationError);
    }
}

TEST_CASE("file round trip through disk") {
    const std::string path = "roundtrip_state.json";
    write_state_file(be_state(6), path);
    CHECK(read_state_file(path) == be_state(6));
    CHECK_THROWS_AS(read_state_file("definitely-not-here.json"), ParseError);
}

TEST_CASE("analysis report mirrors the in-memory structures") {
    const Analysis analysis = analyze_state(be_state(6));
    const std::string text = analysis_to_json(analysis);
    CHECK(text.find("\"count\": 27") != std::string::npos);
    CHECK(text.find("\"bound\": 27") != std::string::npos);
    CHECK(text.find("\"violated\": true") != std::string::npos);
    CHECK(text.find("\"all_blocked\": true") != std::string::npos);
    CHECK(text.find("\"undistillable\": [") != std::string::npos);
    // Deterministic output.
    CHECK(analysis_to_json(analyze_state(be_state(6))) == text);
}

TEST_CASE("certificate report names the verdict") {
    const BeCertificate cert = certify(6);
    const std::string text = certificate_to_json(cert, analyze_state(be_state(6)));
    CHECK(text.find("\"verdict\": \"BoundEntangledViolating\"") != std::string::npos);
    CHECK(text.find("\"kind\": \"dense-npt\"") != std::string::npos);
}

TEST_CASE("table CSV rows carry the quoted reference values") {
    const std::string csv = render_table_csv(5);
    CHECK(csv == "N,bound,total_splits,p_lower_bound\n"
                 "3,3,3,0.666666666667\n"
                 "4,6,7,0.738796125036\n"
                 "5,13,15,0.8\n");
    CHECK_THROWS_AS(render_table_csv(2), IndexRangeError);
}
