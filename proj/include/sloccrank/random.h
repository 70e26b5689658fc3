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

#ifndef SLOCCRANK_RANDOM_H
#define SLOCCRANK_RANDOM_H

#include <random>

#include "sloccrank/scalar.h"
#include "sloccrank/state.h"

namespace sloccrank {

// Sampling helpers shared by the verifier, table reproduction and tests.
// Everything draws from a caller-owned std::mt19937_64 so runs are
// reproducible from a single seed.

/// re + im*i with re, im uniform in [-bound, bound].
Scalar random_gaussian_integer(std::mt19937_64 &rng, int bound);

/// p/q with p uniform in [-9, 9] \ {0}, q uniform in [1, 9].
Rational random_nonzero_rational(std::mt19937_64 &rng);

/// p/q with p uniform in [-3, 3], q in {1, 2}. The small grid makes zero and
/// coincidences like a = -b common, which is what unconstrained table
/// sampling needs to reach boundary cells.
Rational random_grid_rational(std::mt19937_64 &rng);

/// Between 1 and max_terms nonzero Gaussian-integer amplitudes at random
/// indices (duplicates merge; a full cancellation is redrawn).
PureState random_small_state(int n, std::mt19937_64 &rng, int max_terms = 8, int bound = 3);

/// Tensor product of n random nonzero single-qubit vectors.
PureState random_product_state(int n, std::mt19937_64 &rng, int bound = 3);

}  // namespace sloccrank

#endif
