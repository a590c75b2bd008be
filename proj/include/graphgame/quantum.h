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

#ifndef GRAPHGAME_QUANTUM_H
#define GRAPHGAME_QUANTUM_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphgame/game.h"
#include "graphgame/graph.h"
#include "graphgame/rational.h"

namespace graphgame {

/// One parity relation satisfied by every outcome: the answers over
/// `support` sum to `rhs` mod 2. `d` is the eulerian set whose stabilizer
/// element X_D Z_Odd(D) produced it.
struct ParityRow {
    VertexSet d;
    VertexSet support;
    bool rhs = false;
};

/// Outcome distribution of the graph state strategy on one question.
///
/// Players with x_i = 1 measure X, the others measure Z. The measurable
/// stabilizer elements are exactly the X_D Z_Odd(D) with D eulerian, D inside
/// the ones of x and Odd(D) inside its zeros, each carrying the sign
/// (-1)^|E(D)|. Outcomes are therefore uniform on the affine subspace cut out
/// by their parity rows: P(a) = 2^-(n - rank) on solutions, 0 elsewhere.
class QuantumDistribution {
   public:
    /// Builds the distribution from raw rows. Throws std::logic_error if the
    /// rows are inconsistent over GF(2).
    QuantumDistribution(int players, Question x, std::vector<ParityRow> rows);

    int players() const {
        return players_;
    }
    Question question() const {
        return x_;
    }
    const std::vector<ParityRow> &rows() const {
        return rows_;
    }
    int rank() const {
        return static_cast<int>(echelon_.size());
    }
    /// Every supported outcome has probability 2^-log2_denominator().
    int log2_denominator() const {
        return players_ - rank();
    }
    uint64_t support_size() const {
        return uint64_t{1} << log2_denominator();
    }

    bool in_support(Answer a) const;
    Rational probability(Answer a) const;

    /// Calls f(a) for every supported outcome, in no particular order.
    template <typename F>
    void for_each_support(F &&f) const {
        Answer a = particular_;
        f(a);
        const uint64_t count = uint64_t{1} << kernel_.size();
        for (uint64_t g = 1; g < count; g++) {
            a ^= kernel_[std::countr_zero(g)];
            f(a);
        }
    }
    std::vector<Answer> support() const;

   private:
    int players_;
    Question x_;
    std::vector<ParityRow> rows_;
    // Reduced rows; each has a distinct pivot (its lowest bit) that no other
    // reduced row contains.
    std::vector<ParityRow> echelon_;
    Answer particular_;
    std::vector<VertexSet> kernel_;
};

/// Exact distribution of the graph state strategy for question x. Enumerates
/// the 2^|x| candidate sets D inside the ones of x.
QuantumDistribution quantum_distribution(const Graph &g, Question x);

struct NeverLosesReport {
    bool holds = true;
    uint64_t questions = 0;
    uint64_t answers_checked = 0;
    /// First losing (question, answer) pair in ascending question order.
    std::optional<Question> losing_question;
    std::optional<Answer> losing_answer;
};

/// Largest order accepted by the dense oracle and by never_loses.
inline constexpr int kMaxStateVectorOrder = 20;

/// Checks every supported outcome of every question against the losing set
/// computed independently by the game engine.
NeverLosesReport never_loses_report(const Graph &g);
bool never_loses(const Graph &g);

/// A family of distributions P(a | x) for all 2^n questions, stored as
/// integer weights over a common denominator.
struct Behavior {
    int players = 0;
    uint64_t denominator = 1;
    /// weights[(x << players) | a].
    std::vector<uint64_t> weights;

    uint64_t weight(Question x, Answer a) const {
        return weights[(x.bits() << players) | a.bits()];
    }
};

/// Largest order accepted by `quantum_behavior` (4^n table entries).
inline constexpr int kMaxBehaviorOrder = 12;

/// The graph state behavior with denominator 2^n (exact).
Behavior quantum_behavior(const Graph &g);

/// Witness that player `player`'s input changes the joint distribution of
/// the other players' outputs.
struct SignallingViolation {
    int player = 0;
    Question x_zero;
    Question x_one;
    /// The other players' answers; bit `player` is zero.
    Answer others;
    uint64_t sum_zero = 0;
    uint64_t sum_one = 0;
    uint64_t denominator = 1;

    std::string str(int n) const;
};

/// Strong non-signalling: for every player i, every pair of questions that
/// differ only at i and every assignment to the other answers, summing P
/// over a_i gives the same value. Returns the first violation in ascending
/// question order, then player, then answers; nullopt if none.
std::optional<SignallingViolation> check_non_signalling(const Behavior &behavior);

/// Lines "x-bits a-bits log2denominator" for every supported outcome,
/// sorted lexicographically, each terminated by '\n'.
std::string distribution_dump(const Graph &g);

}  // namespace graphgame

#endif
