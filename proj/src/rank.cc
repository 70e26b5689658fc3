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

#include "sloccrank/rank.h"

#include <algorithm>
#include <limits>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace sloccrank {

RankResult exact_rank(const ScalarMatrix &input) {
    ScalarMatrix m = input;
    RankResult result;
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols && pivot_row < rows; ++c) {
        size_t r = pivot_row;
        while (r < rows && m(r, c).is_zero()) {
            ++r;
        }
        if (r == rows) {
            continue;
        }
        if (r != pivot_row) {
            for (size_t j = c; j < cols; ++j) {
                std::swap(m(r, j), m(pivot_row, j));
            }
        }
        const Scalar inv = m(pivot_row, c).inverse();
        for (size_t i = pivot_row + 1; i < rows; ++i) {
            if (m(i, c).is_zero()) {
                continue;
            }
            const Scalar factor = m(i, c) * inv;
            for (size_t j = c; j < cols; ++j) {
                if (!m(pivot_row, j).is_zero()) {
                    m(i, j) -= factor * m(pivot_row, j);
                }
            }
        }
        result.pivot_columns.push_back(c);
        ++pivot_row;
    }
    result.rank = static_cast<int>(result.pivot_columns.size());
    return result;
}

std::vector<double> singular_values(const ScalarMatrix &m) {
    Eigen::MatrixXcd d(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            d(r, c) = m(r, c).to_complex();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d);
    if (svd.info() != Eigen::Success) {
        throw NumericFailure("SVD did not converge");
    }
    const Eigen::VectorXd &s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

double default_rank_tolerance(const ScalarMatrix &m, const std::vector<double> &sv) {
    if (sv.empty() || sv.front() == 0.0) {
        return 0.0;
    }
    return static_cast<double>(std::max(m.rows(), m.cols())) * std::numeric_limits<double>::epsilon() * sv.front();
}

int numeric_rank(const ScalarMatrix &m, std::optional<double> tol) {
    const std::vector<double> sv = singular_values(m);
    const double threshold = tol.value_or(default_rank_tolerance(m, sv));
    return static_cast<int>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > threshold; }));
}

Scalar exact_det(const ScalarMatrix &input) {
    if (!input.is_square()) {
        throw ShapeError("determinant of a " + std::to_string(input.rows()) + "x" + std::to_string(input.cols()) +
                         " matrix");
    }
    const size_t n = input.rows();
    if (n == 0) {
        return Scalar(1);
    }
    ScalarMatrix m = input;
    Scalar prev(1);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            size_t r = k + 1;
            while (r < n && m(r, k).is_zero()) {
                ++r;
            }
            if (r == n) {
                return Scalar();
            }
            for (size_t j = k; j < n; ++j) {
                std::swap(m(r, j), m(k, j));
            }
            negate = !negate;
        }
        const Scalar prev_inv = prev.inverse();
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                // Exact division: prev divides the 2x2 minor.
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) * prev_inv;
            }
            m(i, k) = Scalar();
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace sloccrank
