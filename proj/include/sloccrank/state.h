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

#ifndef SLOCCRANK_STATE_H
#define SLOCCRANK_STATE_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sloccrank/scalar.h"

namespace sloccrank {

constexpr int kMaxQubits = 16;

/// Sparse amplitude map. Qubit 1 is the most significant bit of the index,
/// so |i_1 i_2 ... i_n> has index (i_1 i_2 ... i_n)_2.
using AmplitudeMap = std::map<uint64_t, Scalar>;

/// Unnormalized pure n-qubit state with at least one nonzero amplitude.
/// Only nonzero amplitudes are stored.
class PureState {
   public:
    /// Drops zero entries, then validates n in [1, 16], indices < 2^n, and
    /// that something nonzero remains. Throws std::invalid_argument.
    PureState(int n, AmplitudeMap amplitudes);

    int num_qubits() const { return n_; }
    uint64_t dimension() const { return uint64_t{1} << n_; }
    const AmplitudeMap &amplitudes() const { return amps_; }
    /// Amplitude at `index` (zero when absent).
    Scalar amplitude(uint64_t index) const;
    size_t num_terms() const { return amps_.size(); }

    friend bool operator==(const PureState &, const PureState &) = default;

   private:
    int n_;
    AmplitudeMap amps_;
};

/// The image of a state under a singular local operator may vanish. This
/// tags that outcome so the coefficient matrix can still be formed.
struct ZeroState {
    int n;
    friend bool operator==(const ZeroState &, const ZeroState &) = default;
};

using StateImage = std::variant<PureState, ZeroState>;

int num_qubits(const StateImage &s);

/// Throws std::invalid_argument unless 1 <= n <= 16.
void check_qubit_count(int n);

PureState basis_state(int n, uint64_t index);
/// |0...0> + |1...1>, n >= 2.
PureState ghz_state(int n);
/// Equal-weight sum over all n-bit strings of Hamming weight ell, 1 <= ell <= n-1.
PureState dicke_state(int n, int ell);
/// W state, i.e. dicke_state(n, 1).
PureState w_state(int n);
/// |0> - |2^n - 1> + sum_{k=1..r} |k (2^ceil(n/2) + 1)>, with
/// 1 <= r <= 2^floor(n/2) - 2. Its coefficient matrix has rank r + 2.
PureState ladder_state(int n, int r);

/// Single-qubit factors (alpha, beta) meaning alpha|0> + beta|1>, qubit 1 first.
struct QubitVector {
    Scalar zero;
    Scalar one;
};
/// Tensor product of single-qubit vectors. Throws if any factor is zero.
PureState product_state(const std::vector<QubitVector> &factors);

enum class Family { L_a2b2, L_ab3, L_abc2, Span0kPsi };

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);

/// Parameters of the four-qubit families. Which ones are required depends on
/// the family: L_a2b2 and L_ab3 use (a, b); L_abc2 uses (a, b, c);
/// span_0kPsi uses (alpha, beta).
struct FamilyParams {
    std::optional<Scalar> a{}, b{}, c{}, alpha{}, beta{};
};

/// Four-qubit family members, unnormalized:
///   L_a2b2     a(|0000>+|1111>) + b(|0101>+|1010>) + |0011> + |0110>
///   L_ab3      a(|0000>+|1111>) + (a+b)/2 (|0101>+|1010>) + (a-b)/2 (|0110>+|1001>)
///              + i/sqrt2 (|0001>+|0010>+|0111>+|1011>)
///   L_abc2     (a+b)/2 (|0000>+|1111>) + (a-b)/2 (|0011>+|1100>) + c(|0101>+|1010>) + |0110>
///   span_0kPsi |0000> + |1100> + alpha|0011> + beta|1111>
/// Throws std::invalid_argument when a required parameter is missing.
PureState family_state(Family family, const FamilyParams &p);

}  // namespace sloccrank

#endif
