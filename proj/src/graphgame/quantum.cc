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

#include "graphgame/quantum.h"

#include <algorithm>
#include <sstream>

#include "graphgame/parallel.h"

namespace graphgame {

QuantumDistribution::QuantumDistribution(int players, Question x, std::vector<ParityRow> rows)
    : players_(players), x_(x), rows_(std::move(rows)) {
    for (ParityRow row : rows_) {
        for (const auto &e : echelon_) {
            if (row.support.contains(e.support.min())) {
                row.support ^= e.support;
                row.rhs ^= e.rhs;
            }
        }
        if (row.support.empty()) {
            if (row.rhs) {
                throw std::logic_error("inconsistent parity rows for question " + x_.bit_string(players_));
            }
            continue;
        }
        int pivot = row.support.min();
        for (auto &e : echelon_) {
            if (e.support.contains(pivot)) {
                e.support ^= row.support;
                e.rhs ^= row.rhs;
            }
        }
        echelon_.push_back(row);
    }

    VertexSet pivots;
    for (const auto &e : echelon_) {
        pivots.insert(e.support.min());
        if (e.rhs) {
            particular_.insert(e.support.min());
        }
    }
    for (int f : VertexSet::range(players_) - pivots) {
        VertexSet v = VertexSet::singleton(f);
        for (const auto &e : echelon_) {
            if (e.support.contains(f)) {
                v.insert(e.support.min());
            }
        }
        kernel_.push_back(v);
    }
}

bool QuantumDistribution::in_support(Answer a) const {
    for (const auto &e : echelon_) {
        if ((a & e.support).parity() != e.rhs) {
            return false;
        }
    }
    return true;
}

Rational QuantumDistribution::probability(Answer a) const {
    if (!in_support(a)) {
        return Rational(0, 1);
    }
    return Rational(1, support_size());
}

std::vector<Answer> QuantumDistribution::support() const {
    std::vector<Answer> out;
    out.reserve(support_size());
    for_each_support([&](Answer a) { out.push_back(a); });
    std::sort(out.begin(), out.end());
    return out;
}

QuantumDistribution quantum_distribution(const Graph &g, Question x) {
    std::vector<ParityRow> rows;
    VertexSet d;
    while (next_subset_ascending(x, d)) {
        VertexSet odd = odd_neighbourhood(g, d);
        if (odd.intersects(x)) {
            // Either d is not eulerian or Odd(d) meets the X-measured players.
            continue;
        }
        rows.push_back({d, d | odd, (induced_edge_count(g, d) & 1) == 1});
    }
    return QuantumDistribution(g.order(), x, std::move(rows));
}

NeverLosesReport never_loses_report(const Graph &g) {
    int n = g.order();
    if (n > kMaxStateVectorOrder) {
        throw InstanceTooLarge("never_loses is limited to " + std::to_string(kMaxStateVectorOrder) + " players");
    }
    GraphGame game(g);
    const size_t questions = size_t{1} << n;
    std::vector<uint64_t> checked(questions, 0);
    std::vector<Answer> losing(questions);
    std::vector<char> lost(questions, 0);
    parallel_for(questions, [&](size_t bits) {
        Question x(bits);
        auto constraints = game.applicable_constraints(x);
        QuantumDistribution qd = quantum_distribution(g, x);
        uint64_t count = 0;
        qd.for_each_support([&](Answer a) {
            count++;
            for (const auto &c : constraints) {
                if (violated_by(c, a) && !lost[bits]) {
                    lost[bits] = 1;
                    losing[bits] = a;
                }
            }
        });
        checked[bits] = count;
    });

    NeverLosesReport report;
    report.questions = questions;
    for (size_t bits = 0; bits < questions; bits++) {
        report.answers_checked += checked[bits];
        if (lost[bits] && report.holds) {
            report.holds = false;
            report.losing_question = Question(bits);
            report.losing_answer = losing[bits];
        }
    }
    return report;
}

bool never_loses(const Graph &g) {
    return never_loses_report(g).holds;
}

Behavior quantum_behavior(const Graph &g) {
    int n = g.order();
    if (n > kMaxBehaviorOrder) {
        throw InstanceTooLarge("behavior tables are limited to " + std::to_string(kMaxBehaviorOrder) + " players");
    }
    Behavior b;
    b.players = n;
    b.denominator = uint64_t{1} << n;
    b.weights.assign(size_t{1} << (2 * n), 0);
    parallel_for(size_t{1} << n, [&](size_t bits) {
        QuantumDistribution qd = quantum_distribution(g, Question(bits));
        uint64_t w = b.denominator >> qd.log2_denominator();
        qd.for_each_support([&](Answer a) { b.weights[(bits << n) | a.bits()] = w; });
    });
    return b;
}

std::string SignallingViolation::str(int n) const {
    std::ostringstream out;
    out << "player " << player << ": x=" << x_zero.bit_string(n) << " vs " << x_one.bit_string(n)
        << ", other answers " << others.bit_string(n) << ": " << sum_zero << "/" << denominator << " != " << sum_one
        << "/" << denominator;
    return out.str();
}

std::optional<SignallingViolation> check_non_signalling(const Behavior &behavior) {
    const int n = behavior.players;
    const uint64_t count = uint64_t{1} << n;
    for (uint64_t xb = 0; xb < count; xb++) {
        Question x0(xb);
        for (int i = 0; i < n; i++) {
            if (x0.contains(i)) {
                continue;
            }
            Question x1 = x0 | VertexSet::singleton(i);
            for (uint64_t ab = 0; ab < count; ab++) {
                Answer others(ab);
                if (others.contains(i)) {
                    continue;
                }
                Answer flipped = others | VertexSet::singleton(i);
                uint64_t s0 = behavior.weight(x0, others) + behavior.weight(x0, flipped);
                uint64_t s1 = behavior.weight(x1, others) + behavior.weight(x1, flipped);
                if (s0 != s1) {
                    return SignallingViolation{i, x0, x1, others, s0, s1, behavior.denominator};
                }
            }
        }
    }
    return std::nullopt;
}

std::string distribution_dump(const Graph &g) {
    int n = g.order();
    if (n > kMaxStateVectorOrder) {
        throw InstanceTooLarge("distribution dumps are limited to " + std::to_string(kMaxStateVectorOrder) + " players");
    }
    std::vector<std::string> lines;
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); bits++) {
        QuantumDistribution qd = quantum_distribution(g, Question(bits));
        std::string prefix = Question(bits).bit_string(n) + " ";
        std::string suffix = " " + std::to_string(qd.log2_denominator());
        qd.for_each_support([&](Answer a) { lines.push_back(prefix + a.bit_string(n) + suffix); });
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto &line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace graphgame
