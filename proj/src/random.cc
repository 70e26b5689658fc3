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

#include "sloccrank/random.h"

namespace sloccrank {

Scalar random_gaussian_integer(std::mt19937_64 &rng, int bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    long re = d(rng);
    long im = d(rng);
    return GaussRational(Rational(re), Rational(im));
}

Rational random_nonzero_rational(std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(1, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::bernoulli_distribution negative(0.5);
    long p = num(rng);
    long q = den(rng);
    return make_rational(negative(rng) ? -p : p, q);
}

Rational random_grid_rational(std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 2);
    long p = num(rng);
    return make_rational(p, den(rng));
}

PureState random_small_state(int n, std::mt19937_64 &rng, int max_terms, int bound) {
    check_qubit_count(n);
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<uint64_t> index(0, (uint64_t{1} << n) - 1);
    while (true) {
        AmplitudeMap amps;
        const int k = terms(rng);
        for (int t = 0; t < k; ++t) {
            amps[index(rng)] += random_gaussian_integer(rng, bound);
        }
        std::erase_if(amps, [](const auto &kv) { return kv.second.is_zero(); });
        if (!amps.empty()) {
            return {n, std::move(amps)};
        }
    }
}

PureState random_product_state(int n, std::mt19937_64 &rng, int bound) {
    std::vector<QubitVector> factors;
    while (static_cast<int>(factors.size()) < n) {
        QubitVector q{random_gaussian_integer(rng, bound), random_gaussian_integer(rng, bound)};
        if (!q.zero.is_zero() || !q.one.is_zero()) {
            factors.push_back(std::move(q));
        }
    }
    return product_state(factors);
}

}  // namespace sloccrank
