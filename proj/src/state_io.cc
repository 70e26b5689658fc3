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

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sloccrank {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

Scalar scalar_field(const json &v, const char *what) {
    if (!v.is_string()) {
        throw FormatError(std::string(what) + " must be a scalar string");
    }
    return parse_scalar(v.get<std::string>());
}

}  // namespace

PureState state_from_json(std::string_view text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes")) {
        throw FormatError("state must be an object with \"n\" and \"amplitudes\"");
    }
    if (!doc["n"].is_number_integer()) {
        throw FormatError("\"n\" must be an integer");
    }
    const long long n = doc["n"].get<long long>();
    if (n < 1 || n > kMaxQubits) {
        throw FormatError("\"n\" must be in [1, 16]");
    }
    const json &list = doc["amplitudes"];
    if (!list.is_array()) {
        throw FormatError("\"amplitudes\" must be an array");
    }
    AmplitudeMap amps;
    bool first = true;
    uint64_t last = 0;
    for (const json &entry : list) {
        if (!entry.is_object() || !entry.contains("index") || !entry.contains("value")) {
            throw FormatError("amplitude entries need \"index\" and \"value\"");
        }
        if (!entry["index"].is_number_unsigned()) {
            throw FormatError("amplitude index must be a non-negative integer");
        }
        const uint64_t index = entry["index"].get<uint64_t>();
        if (index >= (uint64_t{1} << n)) {
            throw FormatError("amplitude index " + std::to_string(index) + " out of range for n = " +
                              std::to_string(n));
        }
        if (!first && index == last) {
            throw FormatError("duplicate amplitude index " + std::to_string(index));
        }
        if (!first && index < last) {
            throw FormatError("amplitude indices must be strictly increasing");
        }
        Scalar value = scalar_field(entry["value"], "amplitude value");
        if (value.is_zero()) {
            throw FormatError("explicit zero amplitude at index " + std::to_string(index));
        }
        amps.emplace(index, std::move(value));
        first = false;
        last = index;
    }
    if (amps.empty()) {
        throw FormatError("state has no nonzero amplitude");
    }
    return {static_cast<int>(n), std::move(amps)};
}

std::string state_to_json(const PureState &state) {
    json amps = json::array();
    for (const auto &[index, value] : state.amplitudes()) {
        amps.push_back(json::object({{"index", index}, {"value", format_scalar(value)}}));
    }
    nlohmann::ordered_json doc;
    doc["n"] = state.num_qubits();
    doc["amplitudes"] = amps;
    return doc.dump() + "\n";
}

PureState load_state(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open state file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return state_from_json(buf.str());
}

void save_state(const PureState &state, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write state file " + path.string());
    }
    out << state_to_json(state);
}

OperatorList operators_from_json(std::string_view text) {
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("ops") || !doc["ops"].is_array() || doc["ops"].empty()) {
        throw FormatError("operators must be an object with a nonempty \"ops\" array");
    }
    OperatorList ops;
    for (const json &m : doc["ops"]) {
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
            m[1].size() != 2) {
            throw FormatError("each operator must be a 2x2 array of scalar strings");
        }
        ops.push_back(LocalOperator(scalar_field(m[0][0], "operator entry"), scalar_field(m[0][1], "operator entry"),
                                    scalar_field(m[1][0], "operator entry"), scalar_field(m[1][1], "operator entry")));
    }
    return ops;
}

std::string operators_to_json(const OperatorList &ops) {
    json list = json::array();
    for (const LocalOperator &op : ops) {
        list.push_back(json::array({json::array({format_scalar(op(0, 0)), format_scalar(op(0, 1))}),
                                    json::array({format_scalar(op(1, 0)), format_scalar(op(1, 1))})}));
    }
    return json{{"ops", list}}.dump() + "\n";
}

}  // namespace sloccrank
