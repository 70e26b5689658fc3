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

#ifndef SLOCCRANK_TABLES_H
#define SLOCCRANK_TABLES_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sloccrank {

// Reproduction of the four-qubit family tables by exact sampling. Each table
// lists cells: a parameter region of one family together with the rank
// signature every member of that region must have.
//
//   verstraete  L_a2b2(a, b),          sigmas (I, (1,4))
//   lamata      span_0kPsi(alpha, beta), sigmas (I, (1,4))
//   chterental  L_ab3(a, b) and L_abc2(a, b, c = a), sigma I

enum class TableId { Verstraete, Lamata, Chterental };

std::optional<TableId> table_from_name(std::string_view name);
std::string_view table_name(TableId id);

struct SamplePoint {
    std::string family;
    /// Parameter name -> scalar text.
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<int> signature;
    /// Set on witnesses of a failure.
    std::string reason;
};

struct CellReport {
    std::string family;
    std::string region;
    std::vector<int> signature;
    /// Cells the tables mark as empty are never sampled; unconstrained
    /// samples must not land in them.
    bool empty = false;
    int samples = 0;
    std::vector<SamplePoint> points;
    bool pass = true;
    std::optional<SamplePoint> witness;
};

struct UnconstrainedReport {
    int samples = 0;
    /// "<family>:<r1,r2,...>" -> count.
    std::map<std::string, int> hits;
    bool pass = true;
    std::optional<SamplePoint> witness;
};

struct TableReport {
    std::string table;
    std::vector<std::string> sigmas;
    std::vector<CellReport> cells;
    UnconstrainedReport unconstrained;

    bool pass() const;
};

/// Draws `samples_per_cell` points inside every nonempty cell and checks the
/// computed signature, then draws 10 * samples_per_cell unconstrained points
/// and checks each lands in the single cell whose region contains it.
/// Throws std::invalid_argument if samples_per_cell < 1.
TableReport classify_table(TableId table, int samples_per_cell, uint64_t seed);

std::string report_to_json(const TableReport &report);

}  // namespace sloccrank

#endif
