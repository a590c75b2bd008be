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

#ifndef GRAPHGAME_GAME_H
#define GRAPHGAME_GAME_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphgame/graph.h"
#include "graphgame/rational.h"

namespace graphgame {

/// Bit i is the question x_i asked to player (vertex) i.
using Question = VertexSet;
/// Bit i is the answer a_i given by player (vertex) i.
using Answer = VertexSet;

/// Thrown when an exhaustive computation is asked for an instance beyond
/// its size bound.
class InstanceTooLarge : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// One element of the losing set, generated by a nonempty eulerian-induced
/// set D. It applies to questions with x = 1 on D and x = 0 on Odd(D); on
/// those questions the answers over D u Odd(D) must have parity |E(D)| mod 2.
struct LosingConstraint {
    VertexSet d;
    VertexSet odd;
    VertexSet support;
    bool win_parity = false;

    bool operator==(const LosingConstraint &) const = default;
};

/// Builds the constraint generated by an eulerian-induced `d`.
LosingConstraint make_constraint(const Graph &g, VertexSet d);

/// One constraint per nonempty eulerian-induced D, in ascending order of D.
/// D = {} is left out: its losing condition 0 = 1 can never hold.
std::vector<LosingConstraint> losing_set(const Graph &g);

inline bool applicable(const LosingConstraint &c, Question x) {
    return c.d.is_subset_of(x) && !c.odd.intersects(x);
}

/// True when the answers violate the constraint's parity.
inline bool violated_by(const LosingConstraint &c, Answer a) {
    return (a & c.support).parity() != c.win_parity;
}

/// Returns a constraint witnessing that (x, a) loses, or nullopt on a win.
std::optional<LosingConstraint> loses(const Graph &g, Question x, Answer a);

/// A graph together with its precomputed losing set.
class GraphGame {
   public:
    explicit GraphGame(Graph g);

    const Graph &graph() const {
        return graph_;
    }
    int players() const {
        return graph_.order();
    }
    const std::vector<LosingConstraint> &constraints() const {
        return constraints_;
    }

    std::vector<LosingConstraint> applicable_constraints(Question x) const;
    std::optional<LosingConstraint> loses(Question x, Answer a) const;
    bool is_constrained(Question x) const;

   private:
    Graph graph_;
    std::vector<LosingConstraint> constraints_;
};

/// A classical deterministic strategy: each player's answer on input 0 and
/// on input 1.
struct StrategyTable {
    int players = 0;
    VertexSet on_zero;
    VertexSet on_one;

    Answer respond(Question x) const {
        return (on_one & x) | (on_zero - x);
    }
    /// on_zero in the low `players` bits, on_one above them.
    uint64_t encoding() const {
        return on_zero.bits() | (on_one.bits() << players);
    }
    static StrategyTable from_encoding(int players, uint64_t code);

    bool operator==(const StrategyTable &) const = default;
};

enum class QuestionDistribution {
    /// Uniform over all 2^n questions.
    uniform,
    /// Uniform over questions with at least one applicable constraint.
    promise,
};

const char *to_string(QuestionDistribution dist);
QuestionDistribution parse_question_distribution(const std::string &text);

struct ClassicalOptimum {
    Rational win_probability;
    uint64_t wins = 0;
    uint64_t questions = 0;
    /// The optimal strategy with the smallest encoding.
    StrategyTable best;
};

/// Largest order accepted by `classical_optimum`.
inline constexpr int kMaxClassicalOrder = 13;

/// Exact optimum over all 4^n deterministic strategies.
///
/// A constraint is satisfied or violated by a strategy independently of the
/// question it is applied to, so the number of questions won is a function
/// of the strategy with a sparse Walsh spectrum: one coefficient per
/// eulerian D. All strategies are scored at once by a fast Walsh-Hadamard
/// transform over the 2n strategy bits in exact integer arithmetic.
ClassicalOptimum classical_optimum(const GraphGame &game, QuestionDistribution dist = QuestionDistribution::uniform);
ClassicalOptimum classical_optimum(const Graph &g, QuestionDistribution dist = QuestionDistribution::uniform);

/// Number of questions of `dist` won by a strategy (direct evaluation).
uint64_t count_wins(const GraphGame &game, const StrategyTable &strategy, QuestionDistribution dist);

/// Checks that the losing set of K_n constrains exactly the odd-weight
/// questions and always demands parity (|x| - 1) / 2 mod 2 over all players.
bool complete_graph_closed_form_check(int n);

/// One promise question of the n-player Mermin parity game.
struct MerminEntry {
    Question x;
    /// Required parity of the sum of all answers: |x| / 2 mod 2.
    bool win_parity = false;
};

/// Entries for every even-weight question, ascending. Requires n >= 3.
std::vector<MerminEntry> mermin_losing_set(int n);

/// Win predicate of the Mermin game. Throws std::invalid_argument when the
/// question violates the even-weight promise.
bool mermin_wins(int n, Question x, Answer a);

/// Which input of player 0 feeds the answer shift a_0 -> a_0 + x_0 + 1.
enum class ShiftSource {
    /// The question the player received, before the relabeling.
    original,
    /// The question after the relabeling x_0 -> x_0 + 1.
    transformed,
};

const char *to_string(ShiftSource s);

/// Exhaustively checks one direction of the correspondence between the graph
/// game on K_n and the Mermin game.
///
/// Graph game to Mermin: a graph game question x with odd weight becomes the
/// Mermin question x with bit 0 flipped. A Mermin answer a' is turned back
/// into a graph game answer by the shift on player 0. Every (x, a') must win
/// in one game iff it wins in the other, and the question map must be a
/// bijection onto the promise set.
bool mermin_forward_holds(int n, ShiftSource source);
/// Mermin to graph game, same conditions.
bool mermin_backward_holds(int n, ShiftSource source);

struct MerminTransformResult {
    bool holds = false;
    /// Conventions for which each direction holds, in {original, transformed}
    /// order. Empty when no convention works.
    std::vector<ShiftSource> forward_sources;
    std::vector<ShiftSource> backward_sources;
    /// Human-readable statement of the convention that makes both
    /// directions work.
    std::string convention;
};

/// Tries both conventions in both directions. `holds` is true when some
/// convention works in each direction. Requires 3 <= n <= 6.
MerminTransformResult mermin_transform_check(int n);

}  // namespace graphgame

#endif
