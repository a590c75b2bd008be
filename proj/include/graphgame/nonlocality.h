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

#ifndef GRAPHGAME_NONLOCALITY_H
#define GRAPHGAME_NONLOCALITY_H

// Combinatorial certificates of genuine multipartite nonlocality for graph
// state behaviors: k-odd-domination, the disjoint-set sufficient condition,
// and k-existential closure. Every positive verdict comes with a witness that
// the validators below re-check from graph primitives alone.

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "graphgame/graph.h"

namespace graphgame {

inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 32;

/// Thrown when a search would examine more candidate subsets than allowed.
/// A search that runs out of budget never reports `false`.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(uint64_t limit, uint64_t examined);
    uint64_t limit() const {
        return limit_;
    }
    uint64_t examined() const {
        return examined_;
    }

   private:
    uint64_t limit_;
    uint64_t examined_;
};

/// Thread-safe count of candidate subsets examined against a limit.
class ProbeCounter {
   public:
    explicit ProbeCounter(uint64_t limit) : limit_(limit) {
    }
    void charge(uint64_t n = 1) {
        uint64_t total = count_.fetch_add(n, std::memory_order_relaxed) + n;
        if (total > limit_) {
            throw BudgetExceeded(limit_, total);
        }
    }
    uint64_t count() const {
        return count_.load();
    }

   private:
    uint64_t limit_;
    std::atomic<uint64_t> count_{0};
};

struct SearchOptions {
    /// Maximum number of candidate subsets (or candidate vertices, for e.c.)
    /// examined over the whole search.
    uint64_t budget = kDefaultBudget;
    /// For graphs built by `paley`, search only sets S containing vertex 0 and
    /// translate their witnesses to every other S.
    bool use_symmetry = true;
};

/// A labeling v_1..v_k of S with sets U_1..U_k outside S such that each U_i
/// induces an eulerian subgraph and Odd(U_i) meets {v_i, ..., v_k} exactly
/// in v_i.
struct OddDominationWitness {
    VertexSet s;
    std::vector<int> order;
    std::vector<VertexSet> u_sets;

    bool operator==(const OddDominationWitness &) const = default;
};

struct KodResult {
    bool verdict = false;
    int k = 0;
    /// One witness per k-subset S, in lexicographic order of S, when the
    /// verdict is true.
    std::vector<OddDominationWitness> witnesses;
    /// Lexicographically first S with no labeling, when the verdict is false.
    std::optional<VertexSet> failing_s;
    uint64_t subsets_examined = 0;
    bool symmetry_reduced = false;
};

/// Decides k-odd-domination.
///
/// For each S the labeling is found by depth-first search over v_1, v_2, ...
/// in ascending vertex order; U_i is the first eulerian subset of V \ S, in
/// size-then-value order, whose odd neighbourhood meets the unlabeled part
/// of S exactly in v_i. The first labeling found is the lexicographically
/// smallest one that works.
KodResult is_kod(const Graph &g, int k, const SearchOptions &options = {});

/// Re-checks one witness against the definition, using only odd_neighbourhood
/// and is_eulerian_induced.
bool validate_kod_witness(const Graph &g, const OddDominationWitness &w, int k);

/// Re-derives the verdict of a k-o.d. result. A true verdict must carry a
/// valid witness for every k-subset. A false verdict's failing S is confirmed
/// by exhaustive search over all labelings and all eulerian subsets of V \ S
/// (requires n - k <= 24).
bool validate_kod_result(const Graph &g, const KodResult &result);

/// Brute force: does some labeling of S admit U-sets? Ascending-integer
/// enumeration of every subset of V \ S for every permutation.
bool brute_force_kod_subset(const Graph &g, VertexSet s);

/// If G is k-o.d. it is j-o.d. for all j < k. Runs is_kod for every
/// j in [1, k), and also drops each vertex from every k-witness to produce
/// (k-1)-witnesses, validating them all. Vacuously true when k = 1 or when
/// G is not k-o.d.
bool kod_monotonicity_check(const Graph &g, int k, const SearchOptions &options = {});

/// k - |T| + 1 pairwise disjoint eulerian subsets of V \ T whose odd
/// neighbourhoods each meet T in exactly one vertex.
struct DisjointFamily {
    VertexSet t;
    std::vector<VertexSet> w_sets;
};

struct StrcorResult {
    /// Literal reading: every T with 1 <= |T| <= k has its disjoint family.
    bool verdict = false;
    int k = 0;
    /// Families for every T, ordered by |T| then lexicographically.
    std::vector<DisjointFamily> families;
    /// First T without a family, when the verdict is false.
    std::optional<VertexSet> failing_t;
    /// Whether the labeling construction (pick W from the family of the
    /// still-unlabeled part of S that avoids the labeled vertices) produced a
    /// valid k-o.d. witness for every S. Only set when `verdict` is true.
    std::optional<bool> construction_valid;
    std::vector<OddDominationWitness> constructed;
    uint64_t subsets_examined = 0;
};

/// Finds `count` pairwise disjoint eulerian subsets of V \ t whose odd
/// neighbourhoods each meet t in exactly one vertex, first found in
/// size-then-value order. Charges every candidate to `probes`.
std::optional<std::vector<VertexSet>> find_disjoint_family(const Graph &g, VertexSet t, int count,
                                                           ProbeCounter &probes);

/// Checks the disjoint-set sufficient condition for k-odd-domination and
/// runs the labeling construction it supports.
StrcorResult strcor_check(const Graph &g, int k, const SearchOptions &options = {});

/// For one k-subset S and one subset T of S: the first vertex outside S
/// adjacent to every vertex of T and to no vertex of S \ T.
struct EcWitness {
    VertexSet s;
    /// (T, vertex) for every T in ascending order.
    std::vector<std::pair<VertexSet, int>> vertices;
};

struct EcFailure {
    VertexSet s;
    VertexSet t;
};

struct KecResult {
    bool verdict = false;
    int k = 0;
    std::vector<EcWitness> witnesses;
    /// First S in lexicographic order and first T in ascending order with no
    /// witness vertex, when the verdict is false.
    std::optional<EcFailure> failure;
    uint64_t subsets_examined = 0;
};

/// Decides k-existential closure. The budget counts candidate vertices.
KecResult is_kec(const Graph &g, int k, const SearchOptions &options = {});

bool validate_kec_witness(const Graph &g, const EcWitness &w, int k);

struct KecImpliesKodResult {
    bool holds = false;
    std::vector<OddDominationWitness> witnesses;
};

/// Builds k-o.d. witnesses from e.c. witnesses: label S in ascending order
/// and take U_i = {u_i}, u_i adjacent to v_1..v_i and to none of
/// v_{i+1}..v_k. Every witness is validated. Requires is_kec(g, k).
KecImpliesKodResult kec_implies_kod(const Graph &g, int k, const SearchOptions &options = {});
bool kec_implies_kod_check(const Graph &g, int k, const SearchOptions &options = {});

/// k^2 * 2^(2k - 2): Paley graphs with more vertices than this are k-e.c.
uint64_t ec_threshold(int k);

nlohmann::json vertex_list_json(VertexSet s);
nlohmann::json witness_json(const OddDominationWitness &w);
nlohmann::json witness_json(const EcWitness &w);
/// Witness file body: {"graph", "k", "kind", "verdict", "witnesses",
/// "failure", "budget": {"subsets_examined"}}.
nlohmann::json report_json(const Graph &g, const KodResult &r);
nlohmann::json report_json(const Graph &g, const KecResult &r);

}  // namespace graphgame

#endif
