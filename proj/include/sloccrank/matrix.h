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

#ifndef SLOCCRANK_MATRIX_H
#define SLOCCRANK_MATRIX_H

#include <cstddef>
#include <vector>

#include "sloccrank/errors.h"
#include "sloccrank/scalar.h"

namespace sloccrank {

/// Dense row-major matrix over Q(i, sqrt2).
class ScalarMatrix {
   public:
    ScalarMatrix() = default;
    ScalarMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ScalarMatrix identity(size_t n) {
        ScalarMatrix m(n, n);
        for (size_t k = 0; k < n; ++k) {
            m(k, k) = Scalar(1);
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar &operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    ScalarMatrix transpose() const {
        ScalarMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; ++r) {
            for (size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    friend ScalarMatrix operator*(const ScalarMatrix &x, const ScalarMatrix &y) {
        if (x.cols_ != y.rows_) {
            throw ShapeError("matrix product dimension mismatch");
        }
        ScalarMatrix z(x.rows_, y.cols_);
        for (size_t r = 0; r < x.rows_; ++r) {
            for (size_t k = 0; k < x.cols_; ++k) {
                const Scalar &xrk = x(r, k);
                if (xrk.is_zero()) {
                    continue;
                }
                for (size_t c = 0; c < y.cols_; ++c) {
                    if (!y(k, c).is_zero()) {
                        z(r, c) += xrk * y(k, c);
                    }
                }
            }
        }
        return z;
    }

    friend bool operator==(const ScalarMatrix &, const ScalarMatrix &) = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace sloccrank

#endif
