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

#include "sloccrank/cli.h"

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "sloccrank/classify.h"
#include "sloccrank/coeff_matrix.h"
#include "sloccrank/io.h"
#include "sloccrank/permutation.h"
#include "sloccrank/rank.h"
#include "sloccrank/slocc.h"
#include "sloccrank/state.h"
#include "sloccrank/tables.h"

namespace sloccrank {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GenArgs {
    std::string family;
    int n = 0;
    int ell = 0;
    int r = 0;
    uint64_t index = 0;
    std::string a, b, c, alpha, beta;
    std::string output;
};

struct RankArgs {
    std::string state;
    std::string sigma;
    bool numeric = false;
    std::optional<double> tol;
};

struct SignatureArgs {
    std::string state;
    std::string sigmas = "all";
};

struct VerifyArgs {
    std::string state;
    int trials = 10;
    uint64_t seed = 0;
    bool allow_singular = false;
    int pool = 3;
};

struct TableArgs {
    std::string id;
    int samples = 5;
    uint64_t seed = 0;
};

QubitPermutation checked_sigma(std::string_view text, int n) {
    QubitPermutation sigma = parse_permutation(text);
    sigma.check_canonical(n);
    return sigma;
}

std::optional<Scalar> optional_scalar(const std::string &text) {
    if (text.empty()) {
        return std::nullopt;
    }
    return parse_scalar(text);
}

int cmd_gen(const GenArgs &args, std::ostream &out, std::ostream &err) {
    std::optional<PureState> state;
    const std::string &f = args.family;
    if (auto family = family_from_name(f)) {
        if (args.n != 0 && args.n != 4) {
            throw UsageError("family " + f + " is a four-qubit family");
        }
        FamilyParams p{optional_scalar(args.a), optional_scalar(args.b), optional_scalar(args.c),
                       optional_scalar(args.alpha), optional_scalar(args.beta)};
        state = family_state(*family, p);
    } else {
        if (args.n == 0) {
            throw UsageError("--n is required for family " + f);
        }
        if (f == "basis") {
            state = basis_state(args.n, args.index);
        } else if (f == "ghz") {
            state = ghz_state(args.n);
        } else if (f == "w") {
            state = w_state(args.n);
        } else if (f == "dicke") {
            state = dicke_state(args.n, args.ell);
        } else if (f == "ladder") {
            state = ladder_state(args.n, args.r);
        } else {
            throw UsageError("unknown family '" + f + "'");
        }
    }
    save_state(*state, args.output);
    err << "gen: wrote " << state->num_qubits() << "-qubit " << f << " state with " << state->num_terms()
        << " terms to " << args.output << "\n";
    ordered_json j;
    j["family"] = f;
    j["n"] = state->num_qubits();
    j["terms"] = state->num_terms();
    j["output"] = args.output;
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_rank(const RankArgs &args, std::ostream &out, std::ostream &err) {
    const PureState state = load_state(args.state);
    const QubitPermutation sigma = checked_sigma(args.sigma, state.num_qubits());
    const CoeffMatrix m = coefficient_matrix(state, sigma);
    const RankResult exact = exact_rank(m);
    ordered_json j;
    j["rank"] = exact.rank;
    j["sigma"] = sigma.str();
    j["pivot_columns"] = exact.pivot_columns;
    int code = kExitOk;
    if (args.numeric || args.tol) {
        const std::vector<double> sv = singular_values(m.entries);
        const double tol = args.tol.value_or(default_rank_tolerance(m.entries, sv));
        const int numeric = numeric_rank(m.entries, tol);
        j["numeric_rank"] = numeric;
        j["tolerance"] = tol;
        j["singular_values"] = sv;
        j["agree"] = numeric == exact.rank;
        if (numeric != exact.rank) {
            err << "rank: exact rank " << exact.rank << " but numeric rank " << numeric << "\n";
            code = kExitCheckFailed;
        }
    }
    err << "rank: " << m.rows() << "x" << m.cols() << " coefficient matrix, sigma '" << sigma.str() << "', rank "
        << exact.rank << "\n";
    out << j.dump(2) << "\n";
    return code;
}

int cmd_signature(const SignatureArgs &args, std::ostream &out, std::ostream &err) {
    const PureState state = load_state(args.state);
    const int n = state.num_qubits();
    std::vector<QubitPermutation> sigmas;
    if (args.sigmas == "all") {
        sigmas = n >= 2 ? enumerate_sigmas(n) : std::vector<QubitPermutation>{QubitPermutation::identity()};
    } else {
        std::string_view rest = args.sigmas;
        while (true) {
            const size_t cut = rest.find(';');
            sigmas.push_back(checked_sigma(rest.substr(0, cut), n));
            if (cut == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(cut + 1);
        }
    }
    const FamilySignature sig = rank_signature(state, sigmas);
    ordered_json j;
    j["n"] = n;
    std::vector<std::string> names;
    for (const QubitPermutation &s : sig.sigmas) {
        names.push_back(s.str());
    }
    j["sigmas"] = names;
    j["ranks"] = sig.ranks;
    err << "signature: (" << sig.str() << ") over " << sigmas.size() << " permutations\n";
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_permutations(int n, std::ostream &out, std::ostream &err) {
    const std::vector<QubitPermutation> sigmas = enumerate_sigmas(n);
    std::vector<std::string> names;
    for (const QubitPermutation &s : sigmas) {
        names.push_back(s.str());
    }
    ordered_json j;
    j["n"] = n;
    j["count"] = sigmas.size();
    j["sigmas"] = names;
    err << "permutations: " << sigmas.size() << " for n = " << n << "\n";
    out << j.dump(2) << "\n";
    return kExitOk;
}

struct Tally {
    int passed = 0;
    int failed = 0;
    void record(bool ok) { ++(ok ? passed : failed); }
    ordered_json json() const { return {{"passed", passed}, {"failed", failed}}; }
};

int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err) {
    if (args.trials < 1) {
        throw UsageError("--trials must be >= 1");
    }
    const PureState state = load_state(args.state);
    const int n = state.num_qubits();
    const std::vector<QubitPermutation> all =
        n >= 2 ? enumerate_sigmas(n) : std::vector<QubitPermutation>{QubitPermutation::identity()};
    std::mt19937_64 rng(args.seed);
    Tally equation, invariance, monotonicity, det_relation;
    for (int t = 0; t < args.trials; ++t) {
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        std::vector<QubitPermutation> sigmas{QubitPermutation::identity()};
        if (const QubitPermutation &s = all[pick(rng)]; !s.is_identity()) {
            sigmas.push_back(s);
        }
        const std::vector<int> before = rank_signature(state, sigmas).ranks;

        const OperatorList ops = random_invertible_ops(n, rng, args.pool);
        const StateImage image = apply_local(state, ops);
        for (size_t k = 0; k < sigmas.size(); ++k) {
            equation.record(verify_matrix_equation(state, ops, sigmas[k]));
            invariance.record(exact_rank(coefficient_matrix(image, sigmas[k])).rank == before[k]);
        }
        if (n % 2 == 0) {
            det_relation.record(verify_det_relation(state, ops));
        }

        if (args.allow_singular) {
            const OperatorList any = random_local_ops(n, rng, args.pool);
            const StateImage any_image = apply_local(state, any);
            for (size_t k = 0; k < sigmas.size(); ++k) {
                equation.record(verify_matrix_equation(state, any, sigmas[k]));
                monotonicity.record(exact_rank(coefficient_matrix(any_image, sigmas[k])).rank <= before[k]);
            }
            if (n % 2 == 0) {
                det_relation.record(verify_det_relation(state, any));
            }
        }
    }
    ordered_json checks;
    checks["matrix_equation"] = equation.json();
    checks["rank_invariance"] = invariance.json();
    if (args.allow_singular) {
        checks["monotonicity"] = monotonicity.json();
    }
    if (n % 2 == 0) {
        checks["det_relation"] = det_relation.json();
    }
    const bool pass = equation.failed == 0 && invariance.failed == 0 && monotonicity.failed == 0 &&
                      det_relation.failed == 0;
    ordered_json j;
    j["n"] = n;
    j["trials"] = args.trials;
    j["seed"] = args.seed;
    j["checks"] = checks;
    j["pass"] = pass;
    err << "verify: " << args.trials << " trials, " << (pass ? "all checks passed" : "FAILURES") << "\n";
    out << j.dump(2) << "\n";
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_table(const TableArgs &args, std::ostream &out, std::ostream &err) {
    const auto id = table_from_name(args.id);
    if (!id) {
        throw UsageError("unknown table '" + args.id + "'");
    }
    const TableReport report = classify_table(*id, args.samples, args.seed);
    for (const CellReport &c : report.cells) {
        err << "table " << report.table << ": " << c.family << " [" << c.region << "] "
            << (c.empty ? "empty" : (c.pass ? "ok" : "MISMATCH")) << "\n";
    }
    out << report_to_json(report) << "\n";
    return report.pass() ? kExitOk : kExitCheckFailed;
}

int cmd_dicke_scan(int n, std::ostream &out, std::ostream &err) {
    const std::vector<DickeScanRow> rows = dicke_rank_scan(n);
    ordered_json list = ordered_json::array();
    bool pass = true;
    for (const DickeScanRow &r : rows) {
        const bool ok = r.matches_theory(n);
        pass = pass && ok;
        ordered_json j;
        j["ell"] = r.ell;
        j["rank"] = r.rank;
        j["distinct_nonzero_rows"] = r.distinct_nonzero_rows;
        j["row_multiplicities"] = r.row_multiplicities;
        j["mirror_rank"] = r.mirror_rank;
        j["matches_theory"] = ok;
        list.push_back(j);
        err << "dicke-scan: |" << r.ell << "," << n << "> rank " << r.rank << (ok ? "" : " (UNEXPECTED)") << "\n";
    }
    ordered_json j;
    j["n"] = n;
    j["rows"] = list;
    j["pass"] = pass;
    out << j.dump(2) << "\n";
    return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Rank-based SLOCC classification of pure multi-qubit states", "sloccrank"};
    app.require_subcommand(1);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Generate a named state and write it as JSON");
    gen_cmd->add_option("--family", gen.family, "basis|ghz|w|dicke|ladder|L_a2b2|L_ab3|L_abc2|span_0kPsi")
        ->required();
    gen_cmd->add_option("--n", gen.n, "Number of qubits")->check(CLI::Range(1, kMaxQubits));
    gen_cmd->add_option("--ell", gen.ell, "Dicke excitation count");
    gen_cmd->add_option("--r", gen.r, "Ladder rung count");
    gen_cmd->add_option("--index", gen.index, "Basis index");
    gen_cmd->add_option("--a", gen.a, "Family parameter a");
    gen_cmd->add_option("--b", gen.b, "Family parameter b");
    gen_cmd->add_option("--c", gen.c, "Family parameter c");
    gen_cmd->add_option("--alpha", gen.alpha, "Family parameter alpha");
    gen_cmd->add_option("--beta", gen.beta, "Family parameter beta");
    gen_cmd->add_option("-o,--output", gen.output, "Output state file")->required();

    RankArgs rank;
    auto *rank_cmd = app.add_subcommand("rank", "Exact rank of a coefficient matrix");
    rank_cmd->add_option("--state", rank.state, "State file")->required();
    rank_cmd->add_option("--sigma", rank.sigma, "Permutation \"q:t,...\" (default identity)");
    rank_cmd->add_flag("--numeric", rank.numeric, "Also compute the SVD rank and compare");
    rank_cmd->add_option("--tol", rank.tol, "Singular value threshold for --numeric")->check(CLI::NonNegativeNumber);

    SignatureArgs sig;
    auto *sig_cmd = app.add_subcommand("signature", "Ranks under a list of permutations");
    sig_cmd->add_option("--state", sig.state, "State file")->required();
    sig_cmd->add_option("--sigmas", sig.sigmas, "\"all\" or \"SPEC;SPEC;...\"");

    int perm_n = 0;
    auto *perm_cmd = app.add_subcommand("permutations", "List the inequivalent row/column permutations");
    perm_cmd->add_option("--n", perm_n, "Number of qubits")->required()->check(CLI::Range(2, kMaxQubits));

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Randomized check of the local-operator matrix identities");
    verify_cmd->add_option("--state", verify.state, "State file")->required();
    verify_cmd->add_option("--trials", verify.trials, "Number of random trials");
    verify_cmd->add_option("--seed", verify.seed, "Random seed");
    verify_cmd->add_option("--pool", verify.pool, "Operator entry bound (>= 3)")->check(CLI::Range(3, 1000));
    verify_cmd->add_flag("--allow-singular", verify.allow_singular, "Also test unconstrained operators");

    TableArgs table;
    auto *table_cmd = app.add_subcommand("table", "Reproduce a four-qubit classification table");
    table_cmd->add_option("--id", table.id, "verstraete|lamata|chterental")->required();
    table_cmd->add_option("--samples", table.samples, "Samples per cell")->check(CLI::PositiveNumber);
    table_cmd->add_option("--seed", table.seed, "Random seed");

    int scan_n = 0;
    auto *scan_cmd = app.add_subcommand("dicke-scan", "Rank structure of the Dicke states");
    scan_cmd->add_option("--n", scan_n, "Number of qubits")->required()->check(CLI::Range(2, kMaxQubits));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
        if (rank_cmd->parsed()) return cmd_rank(rank, out, err);
        if (sig_cmd->parsed()) return cmd_signature(sig, out, err);
        if (perm_cmd->parsed()) return cmd_permutations(perm_n, out, err);
        if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
        if (table_cmd->parsed()) return cmd_table(table, out, err);
        if (scan_cmd->parsed()) return cmd_dicke_scan(scan_n, out, err);
    } catch (const NumericFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sloccrank
