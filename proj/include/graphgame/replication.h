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

#ifndef GRAPHGAME_REPLICATION_H
#define GRAPHGAME_REPLICATION_H

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphgame/graph.h"
#include "graphgame/nonlocality.h"

namespace graphgame {

/// Version stamped into every JSON document this project writes.
inline constexpr const char *kSpecVersion = "1.0";

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Every connected labeled graph on n vertices, by adjacency enumeration in
/// ascending order of the upper-triangle bit pattern. Requires n <= 7.
std::vector<Graph> connected_graphs(int n);

/// K3, K4, K5, C5, C7 and the Paley graph on 13 vertices.
std::vector<NamedGraph> never_lose_corpus();

/// Graphs with at most 10 vertices used for distribution-level checks:
/// complete graphs, cycles, paths, stars, Paley 5, the Petersen graph, the
/// 3-cube, K_{3,3}, a wheel and a few fixed pseudo-random graphs.
std::vector<NamedGraph> small_corpus();

/// One hand-worked case for a 4-subset S of the Paley graph on 13 vertices:
/// an eulerian set U outside S whose odd neighbourhood is claimed to meet S
/// only at `named_vertex`, filed under an edge-count class.
struct CaseFixture {
    std::string label;
    std::vector<int> s;
    std::vector<int> u;
    int named_vertex;
    int edge_class;
};

const std::vector<CaseFixture> &pal13_case_fixtures();

struct FixtureCheck {
    /// U is outside S, eulerian, and Odd(U) meets S in exactly one vertex.
    bool witness_valid = false;
    /// That vertex is the one the case names.
    bool named_vertex_matches = false;
    /// S induces exactly `edge_class` edges.
    bool edge_class_matches = false;
    std::optional<int> hit_vertex;
    int edges = 0;
};

FixtureCheck check_fixture(const Graph &pal13, const CaseFixture &fixture);

enum class Verdict { pass, fail, skipped };
const char *to_string(Verdict v);

struct ReplicationReport {
    std::string claim_id;
    std::string locus;
    std::string command;
    Verdict verdict = Verdict::fail;
    std::string witness_path;
    double wall_time_seconds = 0;
    nlohmann::json details;

    nlohmann::json to_json() const;
};

struct ClaimContext {
    SearchOptions search;
    /// Where witness files go; empty to skip writing them.
    std::filesystem::path out_dir;
};

struct ClaimOutcome {
    Verdict verdict = Verdict::fail;
    nlohmann::json details = nlohmann::json::object();
    /// Written to <out_dir>/<claim>-witness.json when present.
    std::optional<nlohmann::json> witness;
};

struct Claim {
    std::string id;
    std::string locus;
    std::string description;
    std::function<ClaimOutcome(const ClaimContext &)> run;
};

/// The fixed claim list R1..R11, in id order.
const std::vector<Claim> &replication_manifest();

/// Runs one claim. A BudgetExceeded during the claim yields a skipped
/// verdict with the reason in details.
ReplicationReport run_claim(const Claim &claim, const ClaimContext &context);

/// Runs the selected claims (all when `ids` is empty), writes one
/// <id>.json report per claim plus summary.json into context.out_dir (when
/// set), and returns the reports ordered by claim id.
std::vector<ReplicationReport> run_replication(const std::vector<std::string> &ids, const ClaimContext &context);

nlohmann::json summary_json(const std::vector<ReplicationReport> &reports);

}  // namespace graphgame

#endif
