// Copyright 2026 The slicckit Authors
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

// Command-line front end: classify, equiv, batch, table, check.
//
// Exit codes: 0 success (including negative verdicts), 1 check failure,
// 2 input or usage error, 3 domain error (e.g. an all-zero state).

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "slicckit/slicckit.hpp"

namespace {

using slicckit::io::Json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

int exit_code(const slicckit::Error &e) {
    switch (e.code()) {
        case slicckit::ErrorCode::Parse:
        case slicckit::ErrorCode::BadArity: return kExitInput;
        default: return kExitDomain;
    }
}

std::string read_all(std::istream &in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

/// Inline JSON when the argument starts with '{', "-" for stdin, else a path.
std::string load_source(const std::string &arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    if (arg == "-") return read_all(std::cin);
    std::ifstream f(arg);
    if (!f) throw slicckit::Error(slicckit::ErrorCode::Parse, "cannot open " + arg);
    return read_all(f);
}

void emit(const Json &j) { std::cout << j.dump(2) << '\n'; }

std::uint64_t default_seed() {
    if (const char *env = std::getenv("SLICCKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw slicckit::Error(slicckit::ErrorCode::Parse, std::string("SLICCKIT_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

Json classify_line(const std::string &line, const slicckit::Tolerances &tol) {
    return slicckit::io::classification_json(slicckit::classify(slicckit::io::parse_state_text(line), tol));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Strictly incoherent (SLICC/LICC) classification of three-qubit pure states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "slicckit 1.0.0");

    slicckit::Tolerances tol;
    std::string mode = "slicc", format = "json", suite = "orbit", table_source = "corrected";
    std::uint64_t seed = 1;
    std::size_t trials = 10000;
    unsigned jobs = 1;
    bool mutate = false;
    std::string input, input2;

    auto add_eps = [&](CLI::App *cmd) {
        cmd->add_option("--eps-supp", tol.support, "Support threshold relative to the largest amplitude")->capture_default_str();
        cmd->add_option("--eps-rank", tol.rank, "Eigenvalue threshold for local ranks")->capture_default_str();
    };

    auto *classify = app.add_subcommand("classify", "Classify one state document");
    classify->add_option("input", input, "Path, '-' for stdin, or inline JSON")->required();
    classify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();
    add_eps(classify);

    auto *equiv = app.add_subcommand("equiv", "Decide equivalence of two state documents");
    equiv->add_option("psi", input, "Source state: path or inline JSON")->required();
    equiv->add_option("phi", input2, "Target state: path or inline JSON")->required();
    equiv->add_option("--mode", mode, "slicc or licc")->check(CLI::IsMember({"slicc", "licc"}))->capture_default_str();
    add_eps(equiv);

    auto *batch = app.add_subcommand("batch", "Classify a JSONL file, one report per line");
    batch->add_option("input", input, "JSONL path or '-' for stdin")->required();
    batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    add_eps(batch);

    auto *table = app.add_subcommand("table", "Export the classification table");
    table->add_option("--format", format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();

    auto *check = app.add_subcommand("check", "Run a randomized consistency campaign");
    check->add_option("--suite", suite, "orbit or ranks")->check(CLI::IsMember({"orbit", "ranks"}))->capture_default_str();
    auto *seed_opt = check->add_option("--seed", seed, "Campaign seed (default: $SLICCKIT_SEED, else 1)");
    check->add_option("--trials", trials, "Number of trials")->capture_default_str();
    check->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
    check->add_flag("--mutate-table", mutate, "Keep only the first condition disjunct of every row (harness self-test)");
    check->add_option("--table-source", table_source, "corrected or printed")
        ->check(CLI::IsMember({"corrected", "printed"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*classify) {
            emit(classify_line(load_source(input), tol));
            return 0;
        }

        if (*equiv) {
            const auto psi = slicckit::io::parse_state_text(load_source(input));
            const auto phi = slicckit::io::parse_state_text(load_source(input2));
            const auto r = mode == "licc" ? slicckit::solve_licc_equivalence(psi, phi, tol) : slicckit::solve_slicc_equivalence(psi, phi, tol);
            emit(slicckit::io::equivalence_json(r, mode));
            return 0;
        }

        if (*batch) {
            // Blank lines are skipped; error objects carry the 1-based file line.
            std::vector<std::string> lines;
            std::vector<std::size_t> line_no;
            {
                std::istringstream in(load_source(input));
                std::size_t n = 0;
                for (std::string line; std::getline(in, line);) {
                    ++n;
                    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                    lines.push_back(std::move(line));
                    line_no.push_back(n);
                }
            }
            std::vector<std::string> out(lines.size());
            std::vector<char> failed(lines.size(), 0);
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i = next++; i < lines.size(); i = next++) {
                    try {
                        out[i] = classify_line(lines[i], tol).dump();
                    } catch (const slicckit::Error &e) {
                        failed[i] = 1;
                        out[i] = Json{{"line", line_no[i]}, {"error", slicckit::io::error_json(slicckit::to_string(e.code()), e.what())}}.dump();
                    } catch (const std::exception &e) {
                        failed[i] = 1;
                        out[i] = Json{{"line", line_no[i]}, {"error", slicckit::io::error_json("internal", e.what())}}.dump();
                    }
                }
            };
            {
                std::vector<std::jthread> pool;
                for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
            }
            std::size_t errors = 0;
            for (std::size_t i = 0; i < lines.size(); ++i) {
                std::cout << out[i] << '\n';
                errors += failed[i];
            }
            std::cerr << lines.size() << (lines.size() == 1 ? " state" : " states") << ", " << errors
                      << (errors == 1 ? " error" : " errors") << '\n';
            return !lines.empty() && errors == lines.size() ? kExitInput : 0;
        }

        if (*table) {
            if (format == "markdown")
                std::cout << slicckit::io::registry_markdown();
            else
                emit(slicckit::io::registry_json());
            return 0;
        }

        if (*check) {
            slicckit::RandomSpec spec;
            spec.seed = seed_opt->count() ? seed : default_seed();
            spec.n_trials = trials;
            spec.jobs = jobs;
            spec.table.mutation = mutate ? slicckit::TableMutation::DropAlternates : slicckit::TableMutation::None;
            spec.table.source = table_source == "printed" ? slicckit::TableSource::Printed : slicckit::TableSource::Corrected;
            const auto report = suite == "ranks" ? slicckit::rank_monotonicity_campaign(spec) : slicckit::orbit_consistency_campaign(spec);
            emit(slicckit::io::consistency_json(report));
            return report.ok() ? 0 : kExitCheckFailed;
        }
    } catch (const slicckit::Error &e) {
        std::cerr << "error (" << slicckit::to_string(e.code()) << "): " << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
