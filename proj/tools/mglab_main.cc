// Copyright 2026 The mglab Authors
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

// Command line driver: construction, verification and learning experiments.
//
// Exit codes: 0 success, 1 domain failure (a check or learner failed), 2 usage
// error (bad flags, unreadable or malformed input files).

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mglab/dist.h"
#include "mglab/embed.h"
#include "mglab/error.h"
#include "mglab/json_io.h"
#include "mglab/learn.h"
#include "mglab/oracle.h"
#include "mglab/rng.h"
#include "mglab/simulate.h"

using nlohmann::json;

namespace mglab {
namespace {

constexpr std::size_t kMaxCliBits = 14;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown once the command has produced its output but the outcome is a failure.
struct DomainFailure {};

const CLI::Validator kBitStringCheck(
    [](std::string &text) -> std::string {
        if (text.empty()) {
            return "must be a non-empty 0/1 string";
        }
        for (char c : text) {
            if (c != '0' && c != '1') {
                return "must be a 0/1 string, got '" + text + "'";
            }
        }
        return {};
    },
    "BITS");

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag, bool required) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv("MGLAB_SEED")) {
        try {
            std::size_t used = 0;
            const std::uint64_t v = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw UsageError(std::string("MGLAB_SEED is not an unsigned integer: '") + env + "'");
    }
    if (required) {
        throw UsageError("this command is stochastic; pass --seed or set MGLAB_SEED");
    }
    return 0;
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    out << text;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

OracleMode parse_mode(const std::string &name) {
    if (name == "exact") {
        return OracleMode::Exact;
    }
    if (name == "empirical") {
        return OracleMode::Empirical;
    }
    return OracleMode::Adversarial;
}

StatOracle make_oracle(OracleMode mode, DistributionTable target, double tau, std::uint64_t seed,
                       std::size_t shots) {
    switch (mode) {
        case OracleMode::Exact:
            return StatOracle::exact(std::move(target), tau);
        case OracleMode::Empirical:
            return StatOracle::empirical(std::move(target), tau, seed, shots);
        case OracleMode::Adversarial:
            break;
    }
    return StatOracle::adversarial(std::move(target), tau, seed);
}

/// Fixed secret from the flag, or a uniformly random one from the trial seed.
Secret trial_secret(const std::string &flag, std::size_t n, std::uint64_t trial_seed) {
    if (!flag.empty()) {
        return Secret::from_string(flag);
    }
    Rng rng(derive_seed(trial_seed, "secret"));
    return Secret(BitString(n, uniform_below(rng, std::uint64_t{1} << n)));
}

std::size_t resolve_n(std::optional<std::size_t> n, const std::string &secret) {
    if (!secret.empty()) {
        if (n && *n != secret.size()) {
            throw UsageError("--n " + std::to_string(*n) + " disagrees with the secret length " +
                             std::to_string(secret.size()));
        }
        n = secret.size();
    }
    if (!n) {
        throw UsageError("pass --n or --secret");
    }
    if (*n > kMaxCliBits) {
        throw UsageError("n must be at most " + std::to_string(kMaxCliBits));
    }
    return *n;
}

// Runs trials on `jobs` threads; results land in trial order so the output
// does not depend on scheduling.
std::vector<json> run_trials(std::size_t trials, std::size_t jobs, const std::function<json(std::size_t)> &trial) {
    std::vector<json> results(trials);
    std::vector<std::exception_ptr> errors(trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < trials; i = next++) {
            try {
                results[i] = trial(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < std::min(jobs, trials); j++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

/// Seed of trial i: the master seed itself for single runs, otherwise a child
/// stream labelled by the command name and trial index.
std::uint64_t trial_seed(std::uint64_t master, const char *command, std::size_t trials, std::size_t i) {
    if (trials == 1) {
        return master;
    }
    return derive_seed(derive_seed(master, command), static_cast<std::uint64_t>(i));
}

/// Writes either the single report or a trial summary. Failure of a single
/// run is a domain failure; multi-trial runs report a success count instead.
void finish_learning(const json &config, std::vector<json> reports, const std::string &out) {
    if (reports.size() == 1) {
        json report = std::move(reports.front());
        report["config"] = config;
        emit(dump_json(report) + "\n", out);
        if (!report["success"].get<bool>()) {
            throw DomainFailure{};
        }
        return;
    }
    std::size_t successes = 0;
    for (const auto &r : reports) {
        successes += r["success"].get<bool>();
    }
    json summary;
    summary["config"] = config;
    summary["experiment"] = reports.front()["experiment"];
    summary["trials"] = reports.size();
    summary["successes"] = successes;
    summary["success_rate"] = static_cast<double>(successes) / static_cast<double>(reports.size());
    summary["reports"] = std::move(reports);
    emit(dump_json(summary) + "\n", out);
}

// ---------------------------------------------------------------- embed

struct EmbedArgs {
    std::string secret;
    double eta = 0;
    bool nonlocal = false;
    std::string out;
    std::string plan_out;
};

std::string default_plan_path(const std::string &circuit_path) {
    std::filesystem::path p(circuit_path);
    if (p.extension() == ".json") {
        p.replace_extension();
    }
    return p.string() + ".plan.json";
}

int run_embed(const EmbedArgs &args) {
    const EmbeddedCircuit e = embed_noisy_parity(Secret::from_string(args.secret), NoiseRate(args.eta), !args.nonlocal);
    const std::string plan_path = args.plan_out.empty() ? default_plan_path(args.out) : args.plan_out;
    emit(dump_json(circuit_to_json(e.circuit)) + "\n", args.out);
    emit(dump_json(plan_to_json(e.plan)) + "\n", plan_path);
    const json summary = {
        {"depth", e.circuit.depth()}, {"gate_count", e.circuit.gate_count()}, {"wires", e.circuit.n}};
    std::cout << dump_json(summary) << "\n";
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string circuit;
    std::string plan;
    std::string secret;
    double eta = 0;
    double tol = 1e-9;
    std::string out;
};

int run_verify(const VerifyArgs &args) {
    MatchgateCircuit circuit;
    std::optional<EmbeddingPlan> plan;
    try {
        circuit = circuit_from_json(read_json_file(args.circuit));
        if (!args.plan.empty()) {
            plan = plan_from_json(read_json_file(args.plan));
        }
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::ParseError) {
            throw UsageError(e.what());
        }
        throw;
    }
    const Secret s = Secret::from_string(args.secret);
    DistributionTable born = born_distribution(circuit);
    if (plan && !plan->local) {
        born = apply_relabeling(*plan, std::move(born));
    }
    const double distance = tvd(born, fermionized_noisy_parity_dist(s, NoiseRate(args.eta)));
    const bool pass = distance < args.tol;

    json config = {{"circuit", args.circuit}, {"secret", args.secret}, {"eta", args.eta}, {"tol", args.tol}};
    config["plan"] = args.plan.empty() ? json(nullptr) : json(args.plan);
    const json report = {{"config", config}, {"tvd", distance}, {"pass", pass}, {"wires", circuit.n},
                         {"depth", circuit.depth()}};
    emit(dump_json(report) + "\n", args.out);
    if (!pass) {
        throw DomainFailure{};
    }
    return 0;
}

// ---------------------------------------------------------------- sq

struct SqArgs {
    std::optional<std::size_t> n;
    std::string secret;
    double eta = 0;
    double tau = 0.2;
    std::string mode = "exact";
    std::size_t shots = 0;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1;
    std::size_t jobs = 1;
    std::string out;
};

int run_sq(const SqArgs &args) {
    const std::size_t n = resolve_n(args.n, args.secret);
    const OracleMode mode = parse_mode(args.mode);
    const bool stochastic = args.secret.empty() || mode != OracleMode::Exact;
    const std::uint64_t master = resolve_seed(args.seed, stochastic);

    auto trial = [&](std::size_t i) {
        const std::uint64_t seed = trial_seed(master, "sq", args.trials, i);
        const Secret s = trial_secret(args.secret, n, seed);
        // Each M query costs two D queries at half the tolerance.
        StatOracle d_oracle =
            make_oracle(mode, noisy_parity_dist(s, NoiseRate(args.eta)), args.tau / 2, derive_seed(seed, "oracle"),
                        args.shots);
        LearnReport report;
        try {
            report = sq_fermionized_parity_learner(d_oracle, args.tau);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NotFound) {
                throw;
            }
            report.experiment = "sq_fermionized";
            report.n = n;
            report.tau = args.tau;
            report.queries_used = d_oracle.query_count();
        }
        report.eta = args.eta;
        report.seed = seed;
        report.success = report.recovered == s;
        json j = report_to_json(report);
        j["secret"] = s.str();
        if (mode == OracleMode::Empirical) {
            j["shots_per_query"] = d_oracle.shots();
        }
        return j;
    };
    json config = {{"command", "sq"}, {"n", n},        {"eta", args.eta},       {"tau", args.tau},
                   {"mode", args.mode}, {"seed", master}, {"trials", args.trials}};
    config["secret"] = args.secret.empty() ? json(nullptr) : json(args.secret);
    config["shots"] = mode == OracleMode::Empirical
                          ? json(args.shots == 0 ? default_empirical_shots(args.tau / 2) : args.shots)
                          : json(nullptr);
    finish_learning(config, run_trials(args.trials, args.jobs, trial), args.out);
    return 0;
}

// ---------------------------------------------------------------- lpn

struct LpnArgs {
    std::optional<std::size_t> n;
    std::string secret;
    double eta = 0.1;
    std::size_t samples = 500;
    bool nonlocal = false;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 1;
    std::size_t jobs = 1;
    std::string out;
};

int run_lpn(const LpnArgs &args) {
    const std::size_t n = resolve_n(args.n, args.secret);
    const std::uint64_t master = resolve_seed(args.seed, true);
    const NoiseRate eta(args.eta);
    if (args.eta > 0.5) {
        throw Error(ErrorKind::InvalidArgument, "learning needs eta <= 1/2");
    }

    auto trial = [&](std::size_t i) {
        const std::uint64_t seed = trial_seed(master, "lpn", args.trials, i);
        const Secret s = trial_secret(args.secret, n, seed);
        // Samples of M_s^eta come from the simulated embedded circuit; dropping
        // z turns them into labelled examples of chi_s with noise eta.
        const DistributionTable m = embedded_distribution(embed_noisy_parity(s, eta, !args.nonlocal));
        Generator d = gen_reduction_pair(table_generator(m, derive_seed(seed, "samples")), ReductionDirection::MToD);

        LearnReport report;
        report.experiment = "lpn";
        report.n = n;
        report.eta = args.eta;
        report.seed = seed;
        if (args.eta == 0) {
            Gf2System system(n);
            std::size_t used = 0;
            while (used < args.samples && system.rank() < n) {
                const std::uint64_t xy = d();
                system.add({BitString(n, xy >> 1), (xy & 1) != 0});
                used++;
            }
            report.recovered = system.solution();
            report.samples_used = used;
        } else {
            const auto raw = d.draw(args.samples);
            report.recovered = lpn_ml_learner(n, unpack_labeled(n, raw), eta);
            report.samples_used = args.samples;
        }
        report.success = report.recovered == s;
        json j = report_to_json(report);
        j["secret"] = s.str();
        return j;
    };
    json config = {{"command", "lpn"},      {"n", n},
                   {"eta", args.eta},       {"samples", args.samples},
                   {"local", !args.nonlocal}, {"seed", master},
                   {"trials", args.trials}};
    config["secret"] = args.secret.empty() ? json(nullptr) : json(args.secret);
    finish_learning(config, run_trials(args.trials, args.jobs, trial), args.out);
    return 0;
}

// ---------------------------------------------------------------- dist

struct DistArgs {
    std::string family = "fermionized";
    std::string secret;
    double eta = 0;
    std::size_t k = 0;
    std::string out;
};

int run_dist(const DistArgs &args) {
    std::optional<DistributionTable> table;
    if (args.family == "even") {
        if (args.k == 0) {
            throw UsageError("--family even needs --k");
        }
        table = even_parity_dist(args.k);
    } else {
        if (args.secret.empty()) {
            throw UsageError("--family " + args.family + " needs --secret");
        }
        const Secret s = Secret::from_string(args.secret);
        table = args.family == "parity" ? noisy_parity_dist(s, NoiseRate(args.eta))
                                        : fermionized_noisy_parity_dist(s, NoiseRate(args.eta));
    }
    std::ostringstream csv;
    write_csv(csv, *table);
    emit(csv.str(), args.out);
    return 0;
}

// ---------------------------------------------------------------- query

struct QueryArgs {
    std::string secret;
    double eta = 0;
    std::string target = "d";
    std::string family = "parity";
    std::string a;
    int b = 0;
    int c = 0;
    std::string point;
    double tau = 0.1;
    std::string mode = "exact";
    std::size_t shots = 0;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_query(const QueryArgs &args) {
    const Secret s = Secret::from_string(args.secret);
    const std::size_t n = s.size();
    const bool on_m = args.target == "m";
    const std::size_t bits = on_m ? n + 2 : n + 1;
    const OracleMode mode = parse_mode(args.mode);
    const std::uint64_t seed = resolve_seed(args.seed, mode != OracleMode::Exact);

    std::optional<StatQuery> phi;
    json query_config;
    if (args.family == "parity") {
        if (args.a.size() != n) {
            throw UsageError("--a must have the secret's length " + std::to_string(n));
        }
        const BitString a = BitString::from_string(args.a);
        phi = on_m ? parity_correlator(a.append(args.b != 0), args.c != 0) : parity_correlator(a, args.b != 0);
        query_config = {{"family", "parity"}, {"a", args.a}, {"b", args.b}};
        if (on_m) {
            query_config["c"] = args.c;
        }
    } else {
        if (args.point.size() != bits) {
            throw UsageError("--point must have " + std::to_string(bits) + " bits for this target");
        }
        phi = indicator_query(BitString::from_string(args.point));
        query_config = {{"family", "indicator"}, {"point", args.point}};
    }

    const DistributionTable d = noisy_parity_dist(s, NoiseRate(args.eta));
    // M queries go through the two-query decomposition against a D oracle.
    StatOracle oracle = make_oracle(mode, d, on_m ? args.tau / 2 : args.tau, derive_seed(seed, "oracle"), args.shots);
    const double value = on_m ? simulate_M_query(*phi, oracle) : oracle.query(*phi);
    const double truth =
        on_m ? expectation(fermionized_noisy_parity_dist(s, NoiseRate(args.eta)), *phi) : expectation(d, *phi);

    json config = {{"command", "query"}, {"secret", args.secret}, {"eta", args.eta}, {"target", args.target},
                   {"tau", args.tau},    {"mode", args.mode},     {"seed", seed},    {"query", query_config}};
    const json report = {{"config", config},
                         {"value", value},
                         {"expectation", truth},
                         {"error", std::abs(value - truth)},
                         {"within_tau", std::abs(value - truth) <= args.tau * (1 + 1e-12)},
                         {"queries_used", oracle.query_count()}};
    emit(dump_json(report) + "\n", args.out);
    return 0;
}

// ---------------------------------------------------------------- main

int run(int argc, char **argv) {
    CLI::App app{"Matchgate parity embeddings and learning experiments"};
    app.require_subcommand(1);
    const auto eta_range = CLI::Range(0.0, 1.0);
    const auto mode_names = CLI::IsMember({"exact", "empirical", "adversarial"});

    EmbedArgs embed;
    auto *embed_cmd = app.add_subcommand("embed", "Build the matchgate circuit for a (noisy) fermionized parity");
    embed_cmd->add_option("--secret", embed.secret, "Secret as a 0/1 string")->required()->check(kBitStringCheck);
    embed_cmd->add_option("--eta", embed.eta, "Label noise rate")->check(eta_range);
    auto *embed_local = embed_cmd->add_flag("--local", "Nearest-neighbour circuit with FSWAP routing (default)");
    embed_cmd->add_flag("--nonlocal", embed.nonlocal, "Block circuit; routing kept as an outcome relabelling")
        ->excludes(embed_local);
    embed_cmd->add_option("--out", embed.out, "Circuit JSON path")->required();
    embed_cmd->add_option("--plan-out", embed.plan_out, "Plan JSON path (default: <out stem>.plan.json)");

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Compare a circuit's output distribution to its target");
    verify_cmd->add_option("--circuit", verify.circuit, "Circuit JSON path")->required();
    verify_cmd->add_option("--plan", verify.plan, "Plan JSON path; needed for non-local circuits");
    verify_cmd->add_option("--secret", verify.secret, "Target secret")->required()->check(kBitStringCheck);
    verify_cmd->add_option("--eta", verify.eta, "Target noise rate")->check(eta_range);
    verify_cmd->add_option("--tol", verify.tol, "Pass threshold on the total variation distance")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", verify.out, "Report path (default: stdout)");

    SqArgs sq;
    auto *sq_cmd = app.add_subcommand("sq", "Statistical-query parity search through the M-to-D reduction");
    sq_cmd->add_option("--n", sq.n, "Secret length")->check(CLI::Range(std::size_t{1}, kMaxCliBits));
    sq_cmd->add_option("--secret", sq.secret, "Fixed secret (default: random per trial)")->check(kBitStringCheck);
    sq_cmd->add_option("--eta", sq.eta, "Label noise rate")->check(CLI::Range(0.0, 0.5));
    sq_cmd->add_option("--tau", sq.tau, "Query tolerance")->check(CLI::Range(1e-6, 0.4999));
    sq_cmd->add_option("--mode", sq.mode, "Oracle mode")->check(mode_names);
    sq_cmd->add_option("--shots", sq.shots, "Samples per empirical query (default: Hoeffding at tau/2)");
    sq_cmd->add_option("--seed", sq.seed, "Master seed (fallback: MGLAB_SEED)");
    sq_cmd->add_option("--trials", sq.trials, "Independent trials")->check(CLI::PositiveNumber);
    sq_cmd->add_option("--jobs", sq.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sq_cmd->add_option("--out", sq.out, "Report path (default: stdout)");

    LpnArgs lpn;
    auto *lpn_cmd = app.add_subcommand("lpn", "Learn a noisy parity from samples of the embedded circuit");
    lpn_cmd->add_option("--n", lpn.n, "Secret length")->check(CLI::Range(std::size_t{1}, kMaxCliBits));
    lpn_cmd->add_option("--secret", lpn.secret, "Fixed secret (default: random per trial)")->check(kBitStringCheck);
    lpn_cmd->add_option("--eta", lpn.eta, "Label noise rate")->check(eta_range);
    lpn_cmd->add_option("--samples", lpn.samples, "Sample budget per trial")->check(CLI::PositiveNumber);
    auto *lpn_local = lpn_cmd->add_flag("--local", "Sample the nearest-neighbour circuit (default)");
    lpn_cmd->add_flag("--nonlocal", lpn.nonlocal, "Sample the block circuit")->excludes(lpn_local);
    lpn_cmd->add_option("--seed", lpn.seed, "Master seed (fallback: MGLAB_SEED)");
    lpn_cmd->add_option("--trials", lpn.trials, "Independent trials")->check(CLI::PositiveNumber);
    lpn_cmd->add_option("--jobs", lpn.jobs, "Worker threads")->check(CLI::PositiveNumber);
    lpn_cmd->add_option("--out", lpn.out, "Report path (default: stdout)");

    DistArgs dist;
    auto *dist_cmd = app.add_subcommand("dist", "Export a distribution of the parity family as CSV");
    dist_cmd->add_option("--family", dist.family, "parity | fermionized | even")
        ->check(CLI::IsMember({"parity", "fermionized", "even"}));
    dist_cmd->add_option("--secret", dist.secret, "Secret")->check(kBitStringCheck);
    dist_cmd->add_option("--eta", dist.eta, "Label noise rate")->check(eta_range);
    dist_cmd->add_option("--k", dist.k, "Width of the even-parity distribution")
        ->check(CLI::Range(std::size_t{1}, kMaxZooSecretBits));
    dist_cmd->add_option("--out", dist.out, "CSV path (default: stdout)");

    QueryArgs query;
    auto *query_cmd = app.add_subcommand("query", "Answer one catalogued statistical query");
    query_cmd->add_option("--secret", query.secret, "Secret")->required()->check(kBitStringCheck);
    query_cmd->add_option("--eta", query.eta, "Label noise rate")->check(eta_range);
    query_cmd->add_option("--target", query.target, "d (labelled examples) or m (fermionized)")
        ->check(CLI::IsMember({"d", "m"}));
    query_cmd->add_option("--family", query.family, "parity | indicator")
        ->check(CLI::IsMember({"parity", "indicator"}));
    query_cmd->add_option("--a", query.a, "Parity mask on x")->check(kBitStringCheck);
    query_cmd->add_option("--b", query.b, "Parity mask bit on y")->check(CLI::Range(0, 1));
    query_cmd->add_option("--c", query.c, "Parity mask bit on z (target m)")->check(CLI::Range(0, 1));
    query_cmd->add_option("--point", query.point, "Indicator point")->check(kBitStringCheck);
    query_cmd->add_option("--tau", query.tau, "Tolerance")->check(CLI::Range(1e-6, 0.9999));
    query_cmd->add_option("--mode", query.mode, "Oracle mode")->check(mode_names);
    query_cmd->add_option("--shots", query.shots, "Samples per empirical query");
    query_cmd->add_option("--seed", query.seed, "Seed (fallback: MGLAB_SEED)");
    query_cmd->add_option("--out", query.out, "Report path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*embed_cmd) {
            return run_embed(embed);
        }
        if (*verify_cmd) {
            return run_verify(verify);
        }
        if (*sq_cmd) {
            return run_sq(sq);
        }
        if (*lpn_cmd) {
            return run_lpn(lpn);
        }
        if (*dist_cmd) {
            return run_dist(dist);
        }
        return run_query(query);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainFailure &) {
        return 1;
    } catch (const Error &e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace
}  // namespace mglab

int main(int argc, char **argv) {
    return mglab::run(argc, argv);
}
