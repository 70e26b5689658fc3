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

#include "sloccrank/state.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace sloccrank {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, 16], got " + std::to_string(n));
    }
}

PureState::PureState(int n, AmplitudeMap amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    check_qubit_count(n);
    std::erase_if(amps_, [](const auto &kv) { return kv.second.is_zero(); });
    if (amps_.empty()) {
        throw std::invalid_argument("state has no nonzero amplitude");
    }
    if (amps_.rbegin()->first >= dimension()) {
        throw std::invalid_argument("amplitude index " + std::to_string(amps_.rbegin()->first) +
                                    " out of range for " + std::to_string(n) + " qubits");
    }
}

Scalar PureState::amplitude(uint64_t index) const {
    auto it = amps_.find(index);
    return it == amps_.end() ? Scalar() : it->second;
}

int num_qubits(const StateImage &s) {
    return std::visit(
        [](const auto &v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, PureState>) {
                return v.num_qubits();
            } else {
                return v.n;
            }
        },
        s);
}

PureState basis_state(int n, uint64_t index) {
    check_qubit_count(n);
    if (index >= (uint64_t{1} << n)) {
        throw std::out_of_range("basis index out of range");
    }
    return {n, {{index, Scalar(1)}}};
}

PureState ghz_state(int n) {
    if (n < 2) {
        throw std::invalid_argument("GHZ state needs n >= 2");
    }
    check_qubit_count(n);
    return {n, {{0, Scalar(1)}, {(uint64_t{1} << n) - 1, Scalar(1)}}};
}

PureState dicke_state(int n, int ell) {
    check_qubit_count(n);
    if (ell < 1 || ell > n - 1) {
        throw std::invalid_argument("Dicke excitation count must be in [1, n-1]");
    }
    AmplitudeMap amps;
    for (uint64_t i = 0; i < (uint64_t{1} << n); ++i) {
        if (std::popcount(i) == ell) {
            amps.emplace(i, Scalar(1));
        }
    }
    return {n, std::move(amps)};
}

PureState w_state(int n) { return dicke_state(n, 1); }

PureState ladder_state(int n, int r) {
    check_qubit_count(n);
    if (n < 4) {
        throw std::invalid_argument("ladder state needs n >= 4");
    }
    const int max_r = (1 << (n / 2)) - 2;
    if (r < 1 || r > max_r) {
        throw std::invalid_argument("ladder rung count must be in [1, " + std::to_string(max_r) + "]");
    }
    const uint64_t step = (uint64_t{1} << ((n + 1) / 2)) + 1;
    AmplitudeMap amps{{0, Scalar(1)}, {(uint64_t{1} << n) - 1, Scalar(-1)}};
    for (int k = 1; k <= r; ++k) {
        amps.emplace(static_cast<uint64_t>(k) * step, Scalar(1));
    }
    return {n, std::move(amps)};
}

PureState product_state(const std::vector<QubitVector> &factors) {
    const int n = static_cast<int>(factors.size());
    check_qubit_count(n);
    AmplitudeMap amps{{0, Scalar(1)}};
    for (const QubitVector &q : factors) {
        if (q.zero.is_zero() && q.one.is_zero()) {
            throw std::invalid_argument("product factor is the zero vector");
        }
        AmplitudeMap next;
        for (const auto &[idx, amp] : amps) {
            if (!q.zero.is_zero()) {
                next.emplace(idx << 1, amp * q.zero);
            }
            if (!q.one.is_zero()) {
                next.emplace((idx << 1) | 1, amp * q.one);
            }
        }
        amps = std::move(next);
    }
    return {n, std::move(amps)};
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "L_a2b2") return Family::L_a2b2;
    if (name == "L_ab3") return Family::L_ab3;
    if (name == "L_abc2") return Family::L_abc2;
    if (name == "span_0kPsi") return Family::Span0kPsi;
    return std::nullopt;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::L_a2b2:
            return "L_a2b2";
        case Family::L_ab3:
            return "L_ab3";
        case Family::L_abc2:
            return "L_abc2";
        case Family::Span0kPsi:
            return "span_0kPsi";
    }
    return "?";
}

namespace {

const Scalar &require(const std::optional<Scalar> &v, const char *param, Family f) {
    if (!v) {
        throw std::invalid_argument("family " + std::string(family_name(f)) + " requires parameter " + param);
    }
    return *v;
}

// Adds `value` at each index; PureState's constructor drops zero terms.
void put(AmplitudeMap &amps, const Scalar &value, std::initializer_list<uint64_t> indices) {
    for (uint64_t i : indices) {
        amps[i] += value;
    }
}

}  // namespace

PureState family_state(Family family, const FamilyParams &p) {
    const Scalar half = Rational(1, 2);
    AmplitudeMap amps;
    switch (family) {
        case Family::L_a2b2: {
            const Scalar &a = require(p.a, "a", family);
            const Scalar &b = require(p.b, "b", family);
            put(amps, a, {0b0000, 0b1111});
            put(amps, b, {0b0101, 0b1010});
            put(amps, 1, {0b0011, 0b0110});
            break;
        }
        case Family::L_ab3: {
            const Scalar &a = require(p.a, "a", family);
            const Scalar &b = require(p.b, "b", family);
            const Scalar i_over_sqrt2{GaussRational(), GaussRational(0, Rational(1, 2))};
            put(amps, a, {0b0000, 0b1111});
            put(amps, (a + b) * half, {0b0101, 0b1010});
            put(amps, (a - b) * half, {0b0110, 0b1001});
            put(amps, i_over_sqrt2, {0b0001, 0b0010, 0b0111, 0b1011});
            break;
        }
        case Family::L_abc2: {
            const Scalar &a = require(p.a, "a", family);
            const Scalar &b = require(p.b, "b", family);
            const Scalar &c = require(p.c, "c", family);
            put(amps, (a + b) * half, {0b0000, 0b1111});
            put(amps, (a - b) * half, {0b0011, 0b1100});
            put(amps, c, {0b0101, 0b1010});
            put(amps, 1, {0b0110});
            break;
        }
        case Family::Span0kPsi: {
            const Scalar &alpha = require(p.alpha, "alpha", family);
            const Scalar &beta = require(p.beta, "beta", family);
            put(amps, 1, {0b0000, 0b1100});
            put(amps, alpha, {0b0011});
            put(amps, beta, {0b1111});
            break;
        }
    }
    return {4, std::move(amps)};
}

}  // namespace sloccrank
