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

#include "graphgame/game.h"

#include <bit>

namespace graphgame {

LosingConstraint make_constraint(const Graph &g, VertexSet d) {
    LosingConstraint c;
    c.d = d;
    c.odd = odd_neighbourhood(g, d);
    c.support = c.d | c.odd;
    c.win_parity = induced_edge_count(g, d) & 1;
    return c;
}

std::vector<LosingConstraint> losing_set(const Graph &g) {
    std::vector<LosingConstraint> out;
    for (VertexSet d : enumerate_eulerian(g, g.vertices())) {
        if (!d.empty()) {
            out.push_back(make_constraint(g, d));
        }
    }
    return out;
}

std::optional<LosingConstraint> loses(const Graph &g, Question x, Answer a) {
    return GraphGame(g).loses(x, a);
}

GraphGame::GraphGame(Graph g) : graph_(g), constraints_(losing_set(graph_)) {
}

std::vector<LosingConstraint> GraphGame::applicable_constraints(Question x) const {
    std::vector<LosingConstraint> out;
    for (const auto &c : constraints_) {
        if (applicable(c, x)) {
            out.push_back(c);
        }
    }
    return out;
}

std::optional<LosingConstraint> GraphGame::loses(Question x, Answer a) const {
    for (const auto &c : constraints_) {
        if (applicable(c, x) && violated_by(c, a)) {
            return c;
        }
    }
    return std::nullopt;
}

bool GraphGame::is_constrained(Question x) const {
    for (const auto &c : constraints_) {
        if (applicable(c, x)) {
            return true;
        }
    }
    return false;
}

StrategyTable StrategyTable::from_encoding(int players, uint64_t code) {
    uint64_t mask = VertexSet::range(players).bits();
    StrategyTable s;
    s.players = players;
    s.on_zero = VertexSet(code & mask);
    s.on_one = VertexSet((code >> players) & mask);
    return s;
}

const char *to_string(QuestionDistribution dist) {
    return dist == QuestionDistribution::uniform ? "uniform" : "promise";
}

QuestionDistribution parse_question_distribution(const std::string &text) {
    if (text == "uniform") {
        return QuestionDistribution::uniform;
    }
    if (text == "promise") {
        return QuestionDistribution::promise;
    }
    throw std::invalid_argument("unknown question distribution '" + text + "'");
}

namespace {

// Calls f(x) for every question in Q(c): x = 1 on d, 0 on odd, free elsewhere.
template <typename F>
void for_each_applicable_question(const LosingConstraint &c, VertexSet all, F &&f) {
    VertexSet free = all - c.support;
    VertexSet extra;
    do {
        f(c.d | extra);
    } while (next_subset_ascending(free, extra));
}

void walsh_hadamard(std::vector<int32_t> &v) {
    for (size_t half = 1; half < v.size(); half <<= 1) {
        for (size_t block = 0; block < v.size(); block += half << 1) {
            for (size_t i = block; i < block + half; i++) {
                int32_t a = v[i];
                int32_t b = v[i + half];
                v[i] = a + b;
                v[i + half] = a - b;
            }
        }
    }
}

}  // namespace

ClassicalOptimum classical_optimum(const GraphGame &game, QuestionDistribution dist) {
    int n = game.players();
    if (n > kMaxClassicalOrder) {
        throw InstanceTooLarge("classical optimum is exhaustive and limited to " + std::to_string(kMaxClassicalOrder) +
                               " players, got " + std::to_string(n));
    }
    const VertexSet all = game.graph().vertices();
    const size_t questions = size_t{1} << n;

    // The constraints applicable to x, together with D = {}, form a group of
    // size 2^r(x); a strategy wins x with weight 2^-r(x) times a character sum
    // over that group.
    std::vector<uint32_t> group_size(questions, 1);
    for (const auto &c : game.constraints()) {
        for_each_applicable_question(c, all, [&](Question x) { group_size[x.bits()]++; });
    }
    std::vector<int32_t> weight(questions);
    uint64_t constrained = 0;
    int64_t base = 0;
    for (size_t x = 0; x < questions; x++) {
        if (!std::has_single_bit(group_size[x])) {
            throw std::logic_error("applicable constraints of question " + VertexSet(x).bit_string(n) +
                                   " do not form a group");
        }
        weight[x] = static_cast<int32_t>(questions / group_size[x]);
        base += weight[x];
        if (group_size[x] > 1) {
            constrained++;
        }
    }

    // Strategy index: on_zero in the low n bits, on_one in the high n bits.
    // A constraint is satisfied by the strategy iff
    // parity(on_one & d) + parity(on_zero & odd) = win_parity.
    std::vector<int32_t> spectrum(size_t{1} << (2 * n), 0);
    spectrum[0] = static_cast<int32_t>(base);
    for (const auto &c : game.constraints()) {
        int32_t mass = 0;
        for_each_applicable_question(c, all, [&](Question x) { mass += weight[x.bits()]; });
        size_t index = c.odd.bits() | (c.d.bits() << n);
        spectrum[index] += c.win_parity ? -mass : mass;
    }
    walsh_hadamard(spectrum);

    size_t best = 0;
    for (size_t i = 1; i < spectrum.size(); i++) {
        if (spectrum[i] > spectrum[best]) {
            best = i;
        }
    }
    if (spectrum[best] % static_cast<int32_t>(questions) != 0) {
        throw std::logic_error("non-integral win count in classical optimum");
    }
    uint64_t wins = static_cast<uint64_t>(spectrum[best]) / questions;

    ClassicalOptimum out;
    out.best = StrategyTable::from_encoding(n, best);
    if (dist == QuestionDistribution::uniform) {
        out.wins = wins;
        out.questions = questions;
    } else {
        out.wins = wins - (questions - constrained);
        out.questions = constrained;
    }
    out.win_probability = out.questions == 0 ? Rational(1, 1) : Rational(out.wins, out.questions);
    return out;
}

ClassicalOptimum classical_optimum(const Graph &g, QuestionDistribution dist) {
    if (g.order() > kMaxClassicalOrder) {
        throw InstanceTooLarge("classical optimum is exhaustive and limited to " + std::to_string(kMaxClassicalOrder) +
                               " players, got " + std::to_string(g.order()));
    }
    return classical_optimum(GraphGame(g), dist);
}

uint64_t count_wins(const GraphGame &game, const StrategyTable &strategy, QuestionDistribution dist) {
    uint64_t wins = 0;
    const size_t questions = size_t{1} << game.players();
    for (size_t bits = 0; bits < questions; bits++) {
        Question x(bits);
        if (dist == QuestionDistribution::promise && !game.is_constrained(x)) {
            continue;
        }
        if (!game.loses(x, strategy.respond(x))) {
            wins++;
        }
    }
    return wins;
}

bool complete_graph_closed_form_check(int n) {
    GraphGame game(complete_graph(n));
    const VertexSet all = game.graph().vertices();
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
        Question x(bits);
        auto applicable_here = game.applicable_constraints(x);
        bool odd_weight = x.size() % 2 == 1;
        if (applicable_here.empty() == odd_weight) {
            return false;
        }
        bool expected = ((x.size() - 1) / 2) % 2 == 1;
        for (const auto &c : applicable_here) {
            if (c.support != all || c.win_parity != expected) {
                return false;
            }
        }
    }
    return true;
}

std::vector<MerminEntry> mermin_losing_set(int n) {
    if (n < 3) {
        throw std::invalid_argument("the Mermin game needs at least 3 players");
    }
    std::vector<MerminEntry> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
        Question x(bits);
        if (x.size() % 2 == 0) {
            out.push_back({x, (x.size() / 2) % 2 == 1});
        }
    }
    return out;
}

bool mermin_wins(int n, Question x, Answer a) {
    if (x.size() % 2 != 0 || !x.is_subset_of(VertexSet::range(n))) {
        throw std::invalid_argument("question " + x.bit_string(n) + " violates the Mermin promise");
    }
    return a.parity() == ((x.size() / 2) % 2 == 1);
}

const char *to_string(ShiftSource s) {
    return s == ShiftSource::original ? "original" : "transformed";
}

namespace {

// a_0 -> a_0 + s + 1 where s is the chosen input bit of player 0.
Answer shift_answer(Answer a, bool s) {
    if (!s) {
        a.toggle(0);
    }
    return a;
}

}  // namespace

bool mermin_forward_holds(int n, ShiftSource source) {
    GraphGame game(complete_graph(n));
    const uint64_t count = uint64_t{1} << n;
    std::vector<bool> hit(count, false);
    for (uint64_t bits = 0; bits < count; bits++) {
        Question x(bits);
        if (!game.is_constrained(x)) {
            continue;
        }
        Question mx = x ^ VertexSet::singleton(0);
        if (mx.size() % 2 != 0 || hit[mx.bits()]) {
            return false;
        }
        hit[mx.bits()] = true;
        bool s = source == ShiftSource::original ? x.contains(0) : mx.contains(0);
        for (uint64_t abits = 0; abits < count; abits++) {
            Answer ma(abits);
            Answer ga = shift_answer(ma, s);
            if (mermin_wins(n, mx, ma) != !game.loses(x, ga)) {
                return false;
            }
        }
    }
    for (const auto &e : mermin_losing_set(n)) {
        if (!hit[e.x.bits()]) {
            return false;
        }
    }
    return true;
}

bool mermin_backward_holds(int n, ShiftSource source) {
    GraphGame game(complete_graph(n));
    const uint64_t count = uint64_t{1} << n;
    std::vector<bool> hit(count, false);
    for (const auto &e : mermin_losing_set(n)) {
        Question gx = e.x ^ VertexSet::singleton(0);
        if (!game.is_constrained(gx) || hit[gx.bits()]) {
            return false;
        }
        hit[gx.bits()] = true;
        bool s = source == ShiftSource::original ? e.x.contains(0) : gx.contains(0);
        for (uint64_t abits = 0; abits < count; abits++) {
            Answer ga(abits);
            Answer ma = shift_answer(ga, s);
            if (!game.loses(gx, ga) != mermin_wins(n, e.x, ma)) {
                return false;
            }
        }
    }
    for (uint64_t bits = 0; bits < count; bits++) {
        if (game.is_constrained(Question(bits)) && !hit[bits]) {
            return false;
        }
    }
    return true;
}

MerminTransformResult mermin_transform_check(int n) {
    if (n < 3 || n > 6) {
        throw std::invalid_argument("mermin_transform_check supports 3 <= n <= 6");
    }
    MerminTransformResult r;
    for (ShiftSource s : {ShiftSource::original, ShiftSource::transformed}) {
        if (mermin_forward_holds(n, s)) {
            r.forward_sources.push_back(s);
        }
        if (mermin_backward_holds(n, s)) {
            r.backward_sources.push_back(s);
        }
    }
    r.holds = !r.forward_sources.empty() && !r.backward_sources.empty();
    if (r.holds) {
        r.convention = std::string("x_0 in the answer shift is the ") + to_string(r.forward_sources.front()) +
                       " input when mapping graph game to Mermin and the " + to_string(r.backward_sources.front()) +
                       " input when mapping Mermin to graph game";
        bool game_side = r.forward_sources.front() == ShiftSource::original &&
                         r.backward_sources.front() == ShiftSource::transformed;
        if (game_side) {
            r.convention += " (in both directions: the K_n graph game input)";
        }
    } else {
        r.convention = "no convention makes both directions hold";
    }
    return r;
}

}  // namespace graphgame
