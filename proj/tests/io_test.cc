// Copyright 2026 The sloccrank Authors
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

#include "sloccrank/io.h"

#include <filesystem>
#include <random>

#include "gtest/gtest.h"
#include "sloccrank/random.h"

namespace sloccrank {
namespace {

TEST(io, state_file_round_trip) {
    const auto path = std::filesystem::temp_directory_path() / "sloccrank_io_ghz3.json";
    save_state(ghz_state(3), path);
    EXPECT_EQ(load_state(path), ghz_state(3));
    std::filesystem::remove(path);
}

TEST(io, state_json_round_trip_random) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        AmplitudeMap amps;
        PureState base = random_small_state(1 + trial % 8, rng);
        for (const auto &[i, a] : base.amplitudes()) {
            amps.emplace(i, a * parse_scalar("1/3-1/2*s2"));
        }
        PureState s(base.num_qubits(), amps);
        ASSERT_EQ(state_from_json(state_to_json(s)), s);
    }
}

TEST(io, state_format) {
    EXPECT_EQ(state_to_json(ladder_state(4, 1)),
              "{\"n\":4,\"amplitudes\":[{\"index\":0,\"value\":\"1\"},{\"index\":5,\"value\":\"1\"},"
              "{\"index\":15,\"value\":\"-1\"}]}\n");
    PureState s = state_from_json(R"({"n": 4, "amplitudes": [{"index": 0, "value": "1"}, {"index": 15, "value": "-1"}]})");
    EXPECT_EQ(s.amplitude(15), Scalar(-1));
}

TEST(io, state_errors) {
    const char *bad[] = {
        R"({"n": 3, "amplitudes": [{"index": 8, "value": "1"}]})",
        R"({"n": 3, "amplitudes": [{"index": 1, "value": "0"}]})",
        R"({"n": 3, "amplitudes": [{"index": 1, "value": "1"}, {"index": 1, "value": "2"}]})",
        R"({"n": 3, "amplitudes": [{"index": 2, "value": "1"}, {"index": 1, "value": "2"}]})",
        R"({"n": 3, "amplitudes": []})",
        R"({"n": 0, "amplitudes": [{"index": 0, "value": "1"}]})",
        R"({"n": 17, "amplitudes": [{"index": 0, "value": "1"}]})",
        R"({"n": "3", "amplitudes": []})",
        R"({"amplitudes": []})",
        R"({"n": 3, "amplitudes": [{"index": -1, "value": "1"}]})",
        R"({"n": 3, "amplitudes": [{"index": 1, "value": 1}]})",
        R"({"n": 3, "amplitudes": [{"value": "1"}]})",
        R"([1, 2])",
        R"({"n": 3,)",
    };
    for (const char *text : bad) {
        EXPECT_THROW(state_from_json(text), FormatError) << text;
    }
    EXPECT_THROW(state_from_json(R"({"n": 3, "amplitudes": [{"index": 1, "value": "1/0"}]})"), ParseError);
    EXPECT_THROW(load_state("/nonexistent/sloccrank.json"), FormatError);
}

TEST(io, operators_round_trip) {
    OperatorList ops{LocalOperator::identity(), LocalOperator(parse_scalar("i"), 2, parse_scalar("s2"), -1)};
    std::string text = operators_to_json(ops);
    EXPECT_EQ(text, "{\"ops\":[[[\"1\",\"0\"],[\"0\",\"1\"]],[[\"i\",\"2\"],[\"1*s2\",\"-1\"]]]}\n");
    EXPECT_EQ(operators_from_json(text), ops);
    EXPECT_THROW(operators_from_json(R"({"ops": [[["1","0"]]]})"), FormatError);
    EXPECT_THROW(operators_from_json(R"({"ops": []})"), FormatError);
    EXPECT_THROW(operators_from_json(R"({"ops": [[["1","0"],["0",1]]]})"), FormatError);
}

}  // namespace
}  // namespace sloccrank
