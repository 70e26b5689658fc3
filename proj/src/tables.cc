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

#include "sloccrank/tables.h"

#include <functional>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "sloccrank/classify.h"
#include "sloccrank/random.h"
#include "sloccrank/state.h"

namespace sloccrank {

namespace {

// Every table family has two free parameters (u, v).
struct Params {
    Scalar u;
    Scalar v;
};

using Sampler = std::function<Params(std::mt19937_64 &)>;
using Region = std::function<bool(const Params &)>;

struct FamilyDef {
    std::string name;
    std::string u_name;
    std::string v_name;
    std::function<PureState(const Params &)> build;
};

struct CellDef {
    size_t family;  // index into TableDef::families
    std::string region;
    std::vector<int> signature;
    Region contains;
    Sampler sample;  // empty for empty cells
};

struct TableDef {
    std::vector<FamilyDef> families;
    std::vector<QubitPermutation> sigmas;
    std::vector<CellDef> cells;
};

Scalar nonzero(std::mt19937_64 &rng) { return random_nonzero_rational(rng); }

Scalar sign(std::mt19937_64 &rng) { return std::bernoulli_distribution(0.5)(rng) ? Scalar(1) : Scalar(-1); }

bool is_zero(const Scalar &x) { return x.is_zero(); }

// One of u, v is zero, the other is not (so u != v automatically).
Params one_zero(std::mt19937_64 &rng) {
    Scalar x = nonzero(rng);
    return std::bernoulli_distribution(0.5)(rng) ? Params{x, 0} : Params{0, x};
}

Params both_nonzero_except(std::mt19937_64 &rng, const Region &reject) {
    while (true) {
        Params p{nonzero(rng), nonzero(rng)};
        if (!reject(p)) {
            return p;
        }
    }
}

TableDef verstraete() {
    TableDef t;
    t.families.push_back({"L_a2b2", "a", "b", [](const Params &p) {
                              return family_state(Family::L_a2b2, {.a = p.u, .b = p.v});
                          }});
    t.sigmas = {QubitPermutation::identity(), QubitPermutation({{1, 4}})};
    const auto plus_minus = [](const Params &p) { return p.u == p.v || p.u == -p.v; };
    t.cells = {
        {0, "a=b=0", {2, 1}, [](const Params &p) { return is_zero(p.u) && is_zero(p.v); },
         [](std::mt19937_64 &) { return Params{0, 0}; }},
        {0, "ab=0 & a≠b", {3, 3}, [](const Params &p) { return (is_zero(p.u) || is_zero(p.v)) && !(p.u == p.v); },
         one_zero},
        {0, "a=±b & a≠0", {4, 2}, [=](const Params &p) { return plus_minus(p) && !is_zero(p.u); },
         [](std::mt19937_64 &rng) {
             Scalar a = nonzero(rng);
             return Params{a, a * sign(rng)};
         }},
        {0, "ab≠0 & a≠±b", {4, 3}, [=](const Params &p) { return !is_zero(p.u * p.v) && !plus_minus(p); },
         [=](std::mt19937_64 &rng) { return both_nonzero_except(rng, plus_minus); }},
    };
    return t;
}

TableDef lamata() {
    TableDef t;
    t.families.push_back({"span_0kPsi", "alpha", "beta", [](const Params &p) {
                              return family_state(Family::Span0kPsi, {.alpha = p.u, .beta = p.v});
                          }});
    t.sigmas = {QubitPermutation::identity(), QubitPermutation({{1, 4}})};
    const auto equal = [](const Params &p) { return p.u == p.v; };
    t.cells = {
        {0, "α=β=0", {1, 2}, [](const Params &p) { return is_zero(p.u) && is_zero(p.v); },
         [](std::mt19937_64 &) { return Params{0, 0}; }},
        {0, "α=β≠0", {1, 4}, [](const Params &p) { return p.u == p.v && !is_zero(p.u); },
         [](std::mt19937_64 &rng) {
             Scalar x = nonzero(rng);
             return Params{x, x};
         }},
        {0, "αβ=0 & α≠β", {2, 3}, [](const Params &p) { return is_zero(p.u * p.v) && !(p.u == p.v); }, one_zero},
        {0, "αβ≠0 & α≠β", {2, 4}, [](const Params &p) { return !is_zero(p.u * p.v) && !(p.u == p.v); },
         [=](std::mt19937_64 &rng) { return both_nonzero_except(rng, equal); }},
    };
    return t;
}

TableDef chterental() {
    TableDef t;
    t.families.push_back({"L_ab3", "a", "b", [](const Params &p) {
                              return family_state(Family::L_ab3, {.a = p.u, .b = p.v});
                          }});
    t.families.push_back({"L_abc2", "a", "b", [](const Params &p) {
                              return family_state(Family::L_abc2, {.a = p.u, .b = p.v, .c = p.u});
                          }});
    t.sigmas = {QubitPermutation::identity()};
    const auto both_zero = [](const Params &p) { return is_zero(p.u) && is_zero(p.v); };
    const auto zeros = [](std::mt19937_64 &) { return Params{0, 0}; };
    const auto generic = [](const Params &p) { return !is_zero(p.u * p.v); };
    const auto generic_sample = [](std::mt19937_64 &rng) { return Params{nonzero(rng), nonzero(rng)}; };
    t.cells = {
        {0, "∅", {1}, [](const Params &) { return false; }, nullptr},
        {0, "a=b=0", {2}, both_zero, zeros},
        {0, "ab=0 & a≠b", {3}, [](const Params &p) { return is_zero(p.u * p.v) && !(p.u == p.v); }, one_zero},
        {0, "ab≠0", {4}, generic, generic_sample},
        {1, "a=b=0", {1}, both_zero, zeros},
        {1, "a=0 & b≠0", {2}, [](const Params &p) { return is_zero(p.u) && !is_zero(p.v); },
         [](std::mt19937_64 &rng) { return Params{0, nonzero(rng)}; }},
        {1, "a≠0 & b=0", {3}, [](const Params &p) { return !is_zero(p.u) && is_zero(p.v); },
         [](std::mt19937_64 &rng) { return Params{nonzero(rng), 0}; }},
        {1, "ab≠0", {4}, generic, generic_sample},
    };
    return t;
}

TableDef table_def(TableId id) {
    switch (id) {
        case TableId::Verstraete:
            return verstraete();
        case TableId::Lamata:
            return lamata();
        case TableId::Chterental:
            return chterental();
    }
    throw std::invalid_argument("unknown table");
}

// Unconstrained draw: small grid rationals, occasionally a complex value.
Scalar free_param(std::mt19937_64 &rng) {
    Rational re = random_grid_rational(rng);
    if (std::bernoulli_distribution(0.25)(rng)) {
        return GaussRational(re, random_grid_rational(rng));
    }
    return re;
}

SamplePoint evaluate(const TableDef &t, const FamilyDef &family, const Params &p) {
    SamplePoint point;
    point.family = family.name;
    point.params = {{family.u_name, format_scalar(p.u)}, {family.v_name, format_scalar(p.v)}};
    point.signature = rank_signature(family.build(p), t.sigmas).ranks;
    return point;
}

std::string format_ranks(const std::vector<int> &ranks) {
    return FamilySignature{{}, ranks}.str();
}

}  // namespace

std::optional<TableId> table_from_name(std::string_view name) {
    if (name == "verstraete") return TableId::Verstraete;
    if (name == "lamata") return TableId::Lamata;
    if (name == "chterental") return TableId::Chterental;
    return std::nullopt;
}

std::string_view table_name(TableId id) {
    switch (id) {
        case TableId::Verstraete:
            return "verstraete";
        case TableId::Lamata:
            return "lamata";
        case TableId::Chterental:
            return "chterental";
    }
    return "?";
}

bool TableReport::pass() const {
    if (!unconstrained.pass) {
        return false;
    }
    for (const CellReport &c : cells) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

TableReport classify_table(TableId id, int samples_per_cell, uint64_t seed) {
    if (samples_per_cell < 1) {
        throw std::invalid_argument("samples per cell must be >= 1");
    }
    const TableDef t = table_def(id);
    std::mt19937_64 rng(seed);
    TableReport report;
    report.table = std::string(table_name(id));
    for (const QubitPermutation &s : t.sigmas) {
        report.sigmas.push_back(s.str());
    }

    for (const CellDef &cell : t.cells) {
        CellReport cr;
        cr.family = t.families[cell.family].name;
        cr.region = cell.region;
        cr.signature = cell.signature;
        cr.empty = !cell.sample;
        if (!cr.empty) {
            for (int s = 0; s < samples_per_cell; ++s) {
                const Params p = cell.sample(rng);
                SamplePoint point = evaluate(t, t.families[cell.family], p);
                if (!cell.contains(p)) {
                    point.reason = "sampler left its region";
                } else if (point.signature != cell.signature) {
                    point.reason = "signature " + format_ranks(point.signature) + " expected " +
                                   format_ranks(cell.signature);
                }
                if (!point.reason.empty() && cr.pass) {
                    cr.pass = false;
                    cr.witness = point;
                }
                cr.points.push_back(std::move(point));
                ++cr.samples;
            }
        }
        report.cells.push_back(std::move(cr));
    }

    UnconstrainedReport &u = report.unconstrained;
    u.samples = 10 * samples_per_cell;
    for (int s = 0; s < u.samples; ++s) {
        const size_t fi = static_cast<size_t>(s) % t.families.size();
        const Params p{free_param(rng), free_param(rng)};
        SamplePoint point = evaluate(t, t.families[fi], p);
        ++u.hits[point.family + ":" + format_ranks(point.signature)];

        std::vector<const CellDef *> owners;
        for (const CellDef &cell : t.cells) {
            if (cell.family == fi && cell.contains(p)) {
                owners.push_back(&cell);
            }
        }
        bool listed = false;
        for (const CellDef &cell : t.cells) {
            listed = listed || (cell.family == fi && cell.sample && cell.signature == point.signature);
        }
        if (owners.size() != 1) {
            point.reason = "point lies in " + std::to_string(owners.size()) + " regions";
        } else if (!owners.front()->sample) {
            point.reason = "point lies in an empty cell";
        } else if (!listed) {
            point.reason = "signature " + format_ranks(point.signature) + " is not a listed cell";
        } else if (point.signature != owners.front()->signature) {
            point.reason = "signature " + format_ranks(point.signature) + " but region '" + owners.front()->region +
                           "' predicts " + format_ranks(owners.front()->signature);
        }
        if (!point.reason.empty() && u.pass) {
            u.pass = false;
            u.witness = point;
        }
    }
    return report;
}

namespace {

nlohmann::ordered_json point_json(const SamplePoint &p) {
    nlohmann::ordered_json j;
    j["family"] = p.family;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto &[name, value] : p.params) {
        params[name] = value;
    }
    j["params"] = params;
    j["signature"] = p.signature;
    if (!p.reason.empty()) {
        j["reason"] = p.reason;
    }
    return j;
}

}  // namespace

std::string report_to_json(const TableReport &report) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["table"] = report.table;
    doc["sigmas"] = report.sigmas;
    ordered_json cells = ordered_json::array();
    for (const CellReport &c : report.cells) {
        ordered_json cj;
        cj["family"] = c.family;
        cj["region"] = c.region;
        cj["signature"] = c.signature;
        cj["empty"] = c.empty;
        cj["samples"] = c.samples;
        cj["pass"] = c.pass;
        ordered_json points = ordered_json::array();
        for (const SamplePoint &p : c.points) {
            points.push_back(point_json(p));
        }
        cj["points"] = points;
        if (c.witness) {
            cj["witness"] = point_json(*c.witness);
        }
        cells.push_back(cj);
    }
    doc["cells"] = cells;
    ordered_json u;
    u["samples"] = report.unconstrained.samples;
    u["hits"] = report.unconstrained.hits;
    u["pass"] = report.unconstrained.pass;
    if (report.unconstrained.witness) {
        u["witness"] = point_json(*report.unconstrained.witness);
    }
    doc["unconstrained_hits"] = u;
    doc["pass"] = report.pass();
    return doc.dump(2);
}

}  // namespace sloccrank
