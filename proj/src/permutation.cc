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

#include "sloccrank/permutation.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "sloccrank/errors.h"

namespace sloccrank {

std::vector<int> QubitPermutation::slot_image(int n) const {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    for (const auto &[q, t] : transpositions_) {
        if (q < 1 || q > n || t < 1 || t > n) {
            throw std::invalid_argument("permutation label out of range for " + std::to_string(n) + " qubits: " + str());
        }
        std::swap(image[q - 1], image[t - 1]);
    }
    return image;
}

void QubitPermutation::check_canonical(int n) const {
    const int half = n / 2;
    for (size_t k = 0; k < transpositions_.size(); ++k) {
        const auto [q, t] = transpositions_[k];
        if (q < 1 || q > half) {
            throw std::invalid_argument("'" + str() + "': " + std::to_string(q) + " is not a row bit for n = " +
                                        std::to_string(n));
        }
        if (t <= half || t > n) {
            throw std::invalid_argument("'" + str() + "': " + std::to_string(t) + " is not a column bit for n = " +
                                        std::to_string(n));
        }
        if (k > 0 && (q <= transpositions_[k - 1].first || t <= transpositions_[k - 1].second)) {
            throw std::invalid_argument("'" + str() + "': pairs must be strictly increasing");
        }
    }
}

bool QubitPermutation::is_canonical(int n) const {
    try {
        check_canonical(n);
        return true;
    } catch (const std::invalid_argument &) {
        return false;
    }
}

std::string QubitPermutation::str() const {
    std::string out;
    for (const auto &[q, t] : transpositions_) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(q) + ':' + std::to_string(t);
    }
    return out;
}

QubitPermutation parse_permutation(std::string_view text) {
    std::vector<QubitPermutation::Transposition> pairs;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    auto number = [&] {
        skip_ws();
        size_t start = pos;
        int value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000) {
                throw ParseError("qubit label too large", start);
            }
            ++pos;
        }
        if (pos == start) {
            throw ParseError("expected a qubit label", pos);
        }
        return value;
    };
    skip_ws();
    if (pos == text.size()) {
        return {};
    }
    while (true) {
        int q = number();
        skip_ws();
        if (pos >= text.size() || text[pos] != ':') {
            throw ParseError("expected ':'", pos);
        }
        ++pos;
        int t = number();
        pairs.emplace_back(q, t);
        skip_ws();
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != ',') {
            throw ParseError("expected ','", pos);
        }
        ++pos;
    }
    return QubitPermutation(std::move(pairs));
}

std::vector<QubitPermutation> enumerate_sigmas(int n) {
    if (n < 2) {
        throw std::invalid_argument("permutations need n >= 2");
    }
    const int half = n / 2;
    std::vector<QubitPermutation> out;
    // Bit (q - 1) of `rows` set means qubit q is a row bit.
    for (uint32_t rows = 0; rows < (uint32_t{1} << n); ++rows) {
        if (std::popcount(rows) != half) {
            continue;
        }
        if (n % 2 == 0 && !(rows & (uint32_t{1} << (half - 1)))) {
            continue;
        }
        std::vector<int> qs, ts;
        for (int q = 1; q <= half; ++q) {
            if (!(rows & (uint32_t{1} << (q - 1)))) {
                qs.push_back(q);
            }
        }
        for (int t = half + 1; t <= n; ++t) {
            if (rows & (uint32_t{1} << (t - 1))) {
                ts.push_back(t);
            }
        }
        std::vector<QubitPermutation::Transposition> pairs;
        for (size_t k = 0; k < qs.size(); ++k) {
            pairs.emplace_back(qs[k], ts[k]);
        }
        out.emplace_back(std::move(pairs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Appends every strictly increasing k-subset of [lo, hi].
void choose(int lo, int hi, int k, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = cur.empty() ? lo : cur.back() + 1; v <= hi; ++v) {
        cur.push_back(v);
        choose(lo, hi, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<QubitPermutation> enumerate_sigmas_direct(int n) {
    if (n < 2) {
        throw std::invalid_argument("permutations need n >= 2");
    }
    const int half = n / 2;
    const int q_max = (n + 1) / 2 - 1;  // q_k < floor((n+1)/2)
    std::vector<QubitPermutation> out;
    for (int k = 0; k <= (n - 1) / 2; ++k) {
        std::vector<std::vector<int>> qsets, tsets;
        std::vector<int> cur;
        choose(1, q_max, k, cur, qsets);
        choose(half + 1, n, k, cur, tsets);
        for (const auto &qs : qsets) {
            for (const auto &ts : tsets) {
                std::vector<QubitPermutation::Transposition> pairs;
                for (int j = 0; j < k; ++j) {
                    pairs.emplace_back(qs[j], ts[j]);
                }
                out.emplace_back(std::move(pairs));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> row_bit_set(const QubitPermutation &sigma, int n) {
    std::vector<int> image = sigma.slot_image(n);
    std::vector<int> rows(image.begin(), image.begin() + n / 2);
    std::sort(rows.begin(), rows.end());
    return rows;
}

PureState permute_qubits(const PureState &state, const std::vector<int> &slot_image) {
    const int n = state.num_qubits();
    std::vector<int> check = slot_image;
    std::sort(check.begin(), check.end());
    std::vector<int> expected(n);
    std::iota(expected.begin(), expected.end(), 1);
    if (check != expected) {
        throw std::invalid_argument("slot image is not a permutation of 1..n");
    }
    AmplitudeMap out;
    for (const auto &[index, amp] : state.amplitudes()) {
        uint64_t target = 0;
        for (int j = 1; j <= n; ++j) {
            const uint64_t bit = (index >> (n - slot_image[j - 1])) & 1;
            target |= bit << (n - j);
        }
        out.emplace(target, amp);
    }
    return {n, std::move(out)};
}

PureState permute_state(const PureState &state, const QubitPermutation &sigma) {
    if (sigma.is_identity()) {
        return state;
    }
    return permute_qubits(state, sigma.slot_image(state.num_qubits()));
}

}  // namespace sloccrank
