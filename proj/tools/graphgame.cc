// Copyright 2026 The graphgame Authors
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

// graphgame: command-line front end.
//
//   graphgame <graph|game|quantum|analyze|replicate> <subcommand>
//             [--graph SPEC] [--k INT] [--dist uniform|promise]
//             [--budget INT] [--out DIR] [--format json|text]
//
// Exit status: 0 all checks pass, 1 some check fails, 2 usage or input
// error, 3 a search ran out of budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphgame/game.h"
#include "graphgame/graph.h"
#include "graphgame/graph6.h"
#include "graphgame/graph_spec.h"
#include "graphgame/nonlocality.h"
#include "graphgame/quantum.h"
#include "graphgame/replication.h"
#include "graphgame/statevector.h"

namespace {

using graphgame::Graph;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr const char *kGrammar =
    "usage: graphgame <graph|game|quantum|analyze|replicate> <subcommand> [--graph SPEC] [--k INT]\n"
    "                 [--dist uniform|promise] [--budget INT] [--out DIR] [--format json|text]\n"
    "\n"
    "  graph     info | graph6 | edges\n"
    "  game      classical | losing-set | mermin\n"
    "  quantum   never-loses | distribution | non-signalling | oracle\n"
    "  analyze   kod | kec | strcor | monotone | kec-implies-kod\n"
    "  replicate list | all | <claim id>   (or --all, --claim ID)\n"
    "\n"
    "  SPEC is paley:N, cycle:N, complete:N, path:N, g6:<string> or file:<path>\n";

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::string subcommand;
    std::string graph;
    int k = 0;
    std::string dist = "uniform";
    uint64_t budget = graphgame::kDefaultBudget;
    std::string out;
    std::string format = "json";
    bool all = false;
    std::string claim;
    bool no_symmetry = false;
};

struct Result {
    json body;
    bool ok = true;
};

Graph require_graph(const Options &opt) {
    if (opt.graph.empty()) {
        throw UsageError(opt.command + " " + opt.subcommand + " needs --graph");
    }
    return graphgame::parse_graph_spec(opt.graph);
}

int require_k(const Options &opt) {
    if (opt.k < 1) {
        throw UsageError(opt.command + " " + opt.subcommand + " needs --k >= 1");
    }
    return opt.k;
}

graphgame::SearchOptions search_options(const Options &opt) {
    graphgame::SearchOptions s;
    s.budget = opt.budget;
    s.use_symmetry = !opt.no_symmetry;
    return s;
}

Result run_graph(const Options &opt) {
    Graph g = require_graph(opt);
    Result r;
    if (opt.subcommand == "info") {
        r.body = {{"graph6", graphgame::emit_graph6(g)},
                  {"order", g.order()},
                  {"edges", g.edge_count()},
                  {"connected", graphgame::is_connected(g)},
                  {"bipartite", graphgame::is_bipartite(g)}};
    } else if (opt.subcommand == "graph6") {
        r.body = {{"graph6", graphgame::emit_graph6(g)}};
    } else if (opt.subcommand == "edges") {
        r.body = graphgame::to_edge_list_json(g);
    } else {
        throw UsageError("unknown graph subcommand '" + opt.subcommand + "'");
    }
    return r;
}

Result run_game(const Options &opt) {
    Result r;
    if (opt.subcommand == "classical") {
        Graph g = require_graph(opt);
        auto dist = graphgame::parse_question_distribution(opt.dist);
        auto best = graphgame::classical_optimum(g, dist);
        r.body = {{"graph", graphgame::emit_graph6(g)},
                  {"distribution", graphgame::to_string(dist)},
                  {"win_probability", best.win_probability.str()},
                  {"wins", best.wins},
                  {"questions", best.questions},
                  {"perfect", best.win_probability.is_one()},
                  {"best_strategy",
                   {{"on_zero", best.best.on_zero.bit_string(g.order())},
                    {"on_one", best.best.on_one.bit_string(g.order())},
                    {"encoding", best.best.encoding()}}}};
    } else if (opt.subcommand == "losing-set") {
        Graph g = require_graph(opt);
        json constraints = json::array();
        for (const auto &c : graphgame::losing_set(g)) {
            constraints.push_back({{"d", graphgame::vertex_list_json(c.d)},
                                   {"odd", graphgame::vertex_list_json(c.odd)},
                                   {"win_parity", c.win_parity ? 1 : 0}});
        }
        r.body = {{"graph", graphgame::emit_graph6(g)}, {"constraints", constraints}};
    } else if (opt.subcommand == "mermin") {
        int n = require_k(opt);
        auto m = graphgame::mermin_transform_check(n);
        json fwd = json::array(), bwd = json::array();
        for (auto s : m.forward_sources) {
            fwd.push_back(graphgame::to_string(s));
        }
        for (auto s : m.backward_sources) {
            bwd.push_back(graphgame::to_string(s));
        }
        r.body = {{"players", n},
                  {"holds", m.holds},
                  {"forward_sources", fwd},
                  {"backward_sources", bwd},
                  {"convention", m.convention}};
        r.ok = m.holds;
    } else {
        throw UsageError("unknown game subcommand '" + opt.subcommand + "'");
    }
    return r;
}

Result run_quantum(const Options &opt) {
    Graph g = require_graph(opt);
    const int n = g.order();
    Result r;
    if (opt.subcommand == "never-loses") {
        auto report = graphgame::never_loses_report(g);
        r.body = {{"graph", graphgame::emit_graph6(g)},
                  {"never_loses", report.holds},
                  {"questions", report.questions},
                  {"answers_checked", report.answers_checked}};
        if (report.losing_question) {
            r.body["losing_question"] = report.losing_question->bit_string(n);
            r.body["losing_answer"] = report.losing_answer->bit_string(n);
        }
        r.ok = report.holds;
    } else if (opt.subcommand == "distribution") {
        r.body = {{"graph", graphgame::emit_graph6(g)}, {"lines", graphgame::distribution_dump(g)}};
    } else if (opt.subcommand == "non-signalling") {
        auto v = graphgame::check_non_signalling(graphgame::quantum_behavior(g));
        r.body = {{"graph", graphgame::emit_graph6(g)}, {"non_signalling", !v.has_value()}};
        if (v) {
            r.body["violation"] = v->str(n);
        }
        r.ok = !v;
    } else if (opt.subcommand == "oracle") {
        graphgame::require_statevector_order(n);
        double worst = 0;
        for (uint64_t xb = 0; xb < (uint64_t{1} << n); xb++) {
            auto qd = graphgame::quantum_distribution(g, graphgame::Question(xb));
            auto dense = graphgame::statevector_distribution<double>(g, graphgame::Question(xb));
            double p = 1.0 / static_cast<double>(qd.support_size());
            for (Eigen::Index a = 0; a < dense.size(); a++) {
                double exact = qd.in_support(graphgame::Answer(static_cast<uint64_t>(a))) ? p : 0.0;
                worst = std::max(worst, std::abs(exact - dense[a]));
            }
        }
        r.body = {{"graph", graphgame::emit_graph6(g)}, {"max_abs_difference", worst}, {"tolerance", 1e-9}};
        r.ok = worst <= 1e-9;
    } else {
        throw UsageError("unknown quantum subcommand '" + opt.subcommand + "'");
    }
    return r;
}

Result run_analyze(const Options &opt) {
    Graph g = require_graph(opt);
    int k = require_k(opt);
    auto search = search_options(opt);
    Result r;
    if (opt.subcommand == "kod") {
        auto result = graphgame::is_kod(g, k, search);
        r.body = graphgame::report_json(g, result);
        r.body["validated"] = graphgame::validate_kod_result(g, result);
        r.ok = result.verdict;
    } else if (opt.subcommand == "kec") {
        auto result = graphgame::is_kec(g, k, search);
        r.body = graphgame::report_json(g, result);
        r.ok = result.verdict;
    } else if (opt.subcommand == "strcor") {
        auto result = graphgame::strcor_check(g, k, search);
        json families = json::array();
        for (const auto &f : result.families) {
            json w = json::array();
            for (auto s : f.w_sets) {
                w.push_back(graphgame::vertex_list_json(s));
            }
            families.push_back({{"t", graphgame::vertex_list_json(f.t)}, {"w", w}});
        }
        r.body = {{"graph", graphgame::emit_graph6(g)},
                  {"k", k},
                  {"kind", "strcor"},
                  {"verdict", result.verdict},
                  {"families", families},
                  {"failure", result.failing_t ? json{{"t", graphgame::vertex_list_json(*result.failing_t)}} : json()},
                  {"construction_valid", result.construction_valid ? json(*result.construction_valid) : json()},
                  {"budget", {{"subsets_examined", result.subsets_examined}}}};
        r.ok = result.verdict && result.construction_valid.value_or(false);
    } else if (opt.subcommand == "monotone") {
        bool holds = graphgame::kod_monotonicity_check(g, k, search);
        r.body = {{"graph", graphgame::emit_graph6(g)}, {"k", k}, {"monotone", holds}};
        r.ok = holds;
    } else if (opt.subcommand == "kec-implies-kod") {
        auto result = graphgame::kec_implies_kod(g, k, search);
        json witnesses = json::array();
        for (const auto &w : result.witnesses) {
            witnesses.push_back(graphgame::witness_json(w));
        }
        r.body = {{"graph", graphgame::emit_graph6(g)}, {"k", k}, {"holds", result.holds}, {"witnesses", witnesses}};
        r.ok = result.holds;
    } else {
        throw UsageError("unknown analyze subcommand '" + opt.subcommand + "'");
    }
    return r;
}

int run_replicate(const Options &opt) {
    std::vector<std::string> ids;
    std::string target = opt.subcommand;
    if (!opt.claim.empty()) {
        target = opt.claim;
    }
    if (opt.all) {
        target = "all";
    }
    if (target.empty()) {
        throw UsageError("replicate needs --all, --claim ID, 'list' or a claim id");
    }
    if (target == "list") {
        json claims = json::array();
        for (const auto &c : graphgame::replication_manifest()) {
            claims.push_back({{"claim", c.id}, {"locus", c.locus}, {"description", c.description}});
        }
        json body = {{"spec_version", graphgame::kSpecVersion}, {"claims", claims}};
        if (opt.format == "text") {
            for (const auto &c : graphgame::replication_manifest()) {
                std::cout << c.id << "  " << c.locus << "\n";
            }
        } else {
            std::cout << body.dump(1) << "\n";
        }
        return kExitPass;
    }
    if (target != "all") {
        ids.push_back(target);
    }
    graphgame::ClaimContext context;
    context.search = search_options(opt);
    context.out_dir = opt.out.empty() ? std::filesystem::path("reports") : std::filesystem::path(opt.out);
    std::vector<graphgame::ReplicationReport> reports;
    try {
        reports = graphgame::run_replication(ids, context);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    bool any_fail = false, any_skip = false;
    for (const auto &r : reports) {
        any_fail = any_fail || r.verdict == graphgame::Verdict::fail;
        any_skip = any_skip || r.verdict == graphgame::Verdict::skipped;
        if (opt.format == "text") {
            std::printf("%-4s %-8s %8.2fs  %s\n", r.claim_id.c_str(), graphgame::to_string(r.verdict),
                        r.wall_time_seconds, r.locus.c_str());
        }
    }
    if (opt.format != "text") {
        std::cout << graphgame::summary_json(reports).dump(1) << "\n";
    }
    return any_fail ? kExitFail : any_skip ? kExitBudget : kExitPass;
}

void print_text(const json &body, const std::string &prefix = "") {
    for (const auto &[key, value] : body.items()) {
        if (value.is_object()) {
            print_text(value, prefix + key + ".");
        } else if (value.is_string()) {
            std::string s = value.get<std::string>();
            if (s.find('\n') != std::string::npos) {
                std::cout << prefix << key << ":\n" << s;
            } else {
                std::cout << prefix << key << ": " << s << "\n";
            }
        } else {
            std::cout << prefix << key << ": " << value.dump() << "\n";
        }
    }
}

int dispatch(const Options &opt) {
    if (opt.command == "replicate") {
        return run_replicate(opt);
    }
    if (opt.subcommand.empty()) {
        throw UsageError(opt.command.empty() ? "missing command" : opt.command + " needs a subcommand");
    }
    Result r;
    if (opt.command == "graph") {
        r = run_graph(opt);
    } else if (opt.command == "game") {
        r = run_game(opt);
    } else if (opt.command == "quantum") {
        r = run_quantum(opt);
    } else if (opt.command == "analyze") {
        r = run_analyze(opt);
    } else {
        throw UsageError("unknown command '" + opt.command + "'");
    }
    json body = {{"spec_version", graphgame::kSpecVersion}};
    body.update(r.body);
    std::string text = opt.format == "text" ? std::string() : body.dump(1);
    if (!opt.out.empty()) {
        std::filesystem::create_directories(opt.out);
        std::ofstream(std::filesystem::path(opt.out) / (opt.command + "-" + opt.subcommand + ".json"))
            << body.dump(1) << "\n";
    }
    if (opt.format == "text") {
        print_text(body);
    } else {
        std::cout << text << "\n";
    }
    return r.ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Graph games, graph state strategies and their nonlocality certificates"};
    app.usage(kGrammar);
    Options opt;
    app.add_option("command", opt.command, "graph, game, quantum, analyze or replicate")
        ->check(CLI::IsMember({"graph", "game", "quantum", "analyze", "replicate"}));
    app.add_option("subcommand", opt.subcommand, "operation within the command");
    app.add_option("--graph", opt.graph, "graph spec");
    app.add_option("--k", opt.k, "subset size, or player count for 'game mermin'")->check(CLI::Range(1, 64));
    app.add_option("--dist", opt.dist, "question distribution")->check(CLI::IsMember({"uniform", "promise"}));
    app.add_option("--budget", opt.budget, "maximum candidate subsets examined by a search")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", opt.out, "output directory");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--all", opt.all, "replicate: run every claim");
    app.add_option("--claim", opt.claim, "replicate: run one claim");
    app.add_flag("--no-symmetry", opt.no_symmetry, "disable the cyclic symmetry reduction for Paley graphs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        std::cout << app.help();
        return kExitPass;
    } catch (const CLI::ParseError &e) {
        std::cerr << "graphgame: " << e.what() << "\n" << kGrammar;
        return kExitUsage;
    }

    try {
        if (opt.command.empty()) {
            throw UsageError("missing command");
        }
        return dispatch(opt);
    } catch (const UsageError &e) {
        std::cerr << "graphgame: " << e.what() << "\n" << kGrammar;
        return kExitUsage;
    } catch (const graphgame::BudgetExceeded &e) {
        json body = {{"spec_version", graphgame::kSpecVersion},
                     {"error", "budget"},
                     {"message", e.what()},
                     {"limit", e.limit()},
                     {"examined", e.examined()}};
        std::cout << body.dump(1) << "\n";
        return kExitBudget;
    } catch (const graphgame::Graph6Error &e) {
        std::cerr << "graphgame: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "graphgame: " << e.what() << "\n";
        return kExitUsage;
    }
}
