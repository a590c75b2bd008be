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

#include <random>

#include <gtest/gtest.h>

#include "graphgame/quantum.h"
#include "graphgame/replication.h"
#include "graphgame/statevector.h"

namespace graphgame {
namespace {

Graph random_graph(int n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
            if (coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

TEST(Affine, CycleSingleX) {
    Graph c5 = cycle_graph(5);
    auto qd = quantum_distribution(c5, Question{0});
    ASSERT_EQ(qd.rows().size(), 1u);
    EXPECT_EQ(qd.rows()[0].support, (VertexSet{0, 1, 4}));
    EXPECT_FALSE(qd.rows()[0].rhs);
    EXPECT_EQ(qd.rank(), 1);
    EXPECT_EQ(qd.support_size(), 16u);
    for (uint64_t ab = 0; ab < 32; ab++) {
        Answer a(ab);
        bool even = !(a & VertexSet{0, 1, 4}).parity();
        EXPECT_EQ(qd.probability(a), even ? Rational(1, 16) : Rational(0, 1));
    }
}

TEST(Affine, CycleAllX) {
    Graph c5 = cycle_graph(5);
    auto qd = quantum_distribution(c5, c5.vertices());
    ASSERT_EQ(qd.rows().size(), 1u);
    EXPECT_EQ(qd.rows()[0].support, c5.vertices());
    EXPECT_TRUE(qd.rows()[0].rhs);
    for (Answer a : qd.support()) {
        EXPECT_TRUE(a.parity());
    }
}

TEST(Affine, AllZQuestionIsUniform) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; trial++) {
        int n = 1 + static_cast<int>(rng() % 12);
        auto qd = quantum_distribution(random_graph(n, 0.5, rng), Question{});
        EXPECT_TRUE(qd.rows().empty());
        EXPECT_EQ(qd.rank(), 0);
        EXPECT_EQ(qd.probability(Answer(rng() & VertexSet::range(n).bits())), Rational(1, int64_t{1} << n));
    }
}

TEST(Affine, InconsistentRowsThrow) {
    std::vector<ParityRow> rows = {{{0}, {0, 1}, false}, {{1}, {0, 1}, true}};
    EXPECT_THROW(QuantumDistribution(2, Question{0, 1}, rows), std::logic_error);
}

TEST(Affine, SupportIsExactlyTheSolutionSet) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 60; trial++) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, 0.5, rng);
        Question x(rng() & VertexSet::range(n).bits());
        auto qd = quantum_distribution(g, x);
        auto support = qd.support();
        EXPECT_EQ(support.size(), qd.support_size());
        size_t solutions = 0;
        for (uint64_t ab = 0; ab < (uint64_t{1} << n); ab++) {
            bool ok = true;
            for (const auto &row : qd.rows()) {
                ok = ok && (Answer(ab) & row.support).parity() == row.rhs;
            }
            EXPECT_EQ(qd.in_support(Answer(ab)), ok);
            solutions += ok;
        }
        EXPECT_EQ(solutions, support.size());
    }
}

TEST(StateVector, Examples) {
    auto k2 = statevector_distribution<double>(complete_graph(2), Question{});
    for (int a = 0; a < 4; a++) {
        EXPECT_NEAR(k2[a], 0.25, 1e-12);
    }
    auto k3 = statevector_distribution<double>(complete_graph(3), Question{0, 1, 2});
    for (uint64_t a = 0; a < 8; a++) {
        EXPECT_NEAR(k3[static_cast<Eigen::Index>(a)], Answer(a).parity() ? 0.25 : 0.0, 1e-12);
    }
    EXPECT_THROW(graph_state<double>(cycle_graph(21)), InstanceTooLarge);
}

TEST(StateVector, AgreesWithAffineOnCorpus) {
    for (const auto &[name, g] : small_corpus()) {
        const int n = g.order();
        for (uint64_t xb = 0; xb < (uint64_t{1} << n); xb++) {
            auto qd = quantum_distribution(g, Question(xb));
            auto dense = statevector_distribution<double>(g, Question(xb));
            EXPECT_NEAR(dense.sum(), 1.0, 1e-9);
            double p = qd.probability(*qd.support().begin()).to_double();
            for (uint64_t ab = 0; ab < (uint64_t{1} << n); ab++) {
                double exact = qd.in_support(Answer(ab)) ? p : 0.0;
                ASSERT_NEAR(dense[static_cast<Eigen::Index>(ab)], exact, 1e-9) << name << " x=" << xb << " a=" << ab;
            }
        }
    }
}

TEST(StateVector, AffineNormalizationIsExact) {
    for (const auto &[name, g] : small_corpus()) {
        const uint64_t scale = uint64_t{1} << g.order();
        for (uint64_t xb = 0; xb < scale; xb += 7) {
            auto qd = quantum_distribution(g, Question(xb));
            uint64_t total = 0;
            for (uint64_t ab = 0; ab < scale; ab++) {
                Rational p = qd.probability(Answer(ab));
                ASSERT_EQ(scale % p.den, 0u);
                total += p.num * (scale / p.den);
            }
            EXPECT_EQ(total, scale) << name;
        }
    }
}

// X_D Z_Odd(D) = (-1)^|E(D)| prod_{i in D} X_i Z_N(i), and each generator
// fixes the graph state.
TEST(StateVector, StabilizerSignRule) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; trial++) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.5, rng);
        auto psi = graph_state<double>(g);
        for (VertexSet d : enumerate_eulerian(g, g.vertices())) {
            auto product = psi;
            for (int i : d) {
                product = apply_pauli(product, VertexSet::singleton(i), g.neighbours(i));
            }
            EXPECT_LT((product - psi).norm(), 1e-12);

            auto direct = apply_pauli(psi, d, odd_neighbourhood(g, d));
            double sign = induced_edge_count(g, d) % 2 ? -1.0 : 1.0;
            EXPECT_LT((direct - sign * psi).norm(), 1e-12) << d.str();
        }
    }
}

TEST(NeverLoses, Corpus) {
    for (const auto &[name, g] : never_lose_corpus()) {
        auto r = never_loses_report(g);
        EXPECT_TRUE(r.holds) << name;
        EXPECT_EQ(r.questions, uint64_t{1} << g.order());
    }
    for (const auto &[name, g] : small_corpus()) {
        EXPECT_TRUE(never_loses(g)) << name;
    }
}

TEST(NonSignalling, GraphStateBehaviors) {
    EXPECT_FALSE(check_non_signalling(quantum_behavior(cycle_graph(5))).has_value());
    EXPECT_FALSE(check_non_signalling(quantum_behavior(complete_graph(3))).has_value());
    for (const auto &[name, g] : small_corpus()) {
        auto b = quantum_behavior(g);
        for (uint64_t xb = 0; xb < (uint64_t{1} << g.order()); xb++) {
            uint64_t total = 0;
            for (uint64_t ab = 0; ab < (uint64_t{1} << g.order()); ab++) {
                total += b.weight(Question(xb), Answer(ab));
            }
            ASSERT_EQ(total, b.denominator);
        }
        auto v = check_non_signalling(b);
        EXPECT_FALSE(v.has_value()) << name << ": " << v->str(g.order());
    }
}

TEST(NonSignalling, PlantedSignallingBoxIsRejected) {
    // Player 0 answers with player 1's input.
    Behavior box;
    box.players = 2;
    box.weights.assign(16, 0);
    for (uint64_t x = 0; x < 4; x++) {
        box.weights[(x << 2) | ((x >> 1) & 1)] = 1;
    }
    auto v = check_non_signalling(box);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->player, 1);
    EXPECT_EQ(v->x_zero, Question{});
    EXPECT_EQ(v->x_one, Question{1});
    EXPECT_NE(v->sum_zero, v->sum_one);
}

TEST(Dump, SortedLines) {
    std::string dump = distribution_dump(complete_graph(2));
    EXPECT_EQ(dump.substr(0, 9), "00 00 2\n0");
    size_t lines = std::count(dump.begin(), dump.end(), '\n');
    // x=11 has no measurable stabilizer, so all four outcomes appear.
    EXPECT_EQ(lines, 4u + 2u + 2u + 4u);
}

}  // namespace
}  // namespace graphgame
