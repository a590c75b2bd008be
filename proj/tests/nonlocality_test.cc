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

#include "graphgame/graph6.h"
#include "graphgame/nonlocality.h"
#include "graphgame/replication.h"

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

TEST(Kod, CycleExamples) {
    Graph c5 = cycle_graph(5);
    auto three = is_kod(c5, 3);
    EXPECT_FALSE(three.verdict);
    ASSERT_TRUE(three.failing_s.has_value());
    EXPECT_EQ(*three.failing_s, (VertexSet{0, 1, 2}));
    EXPECT_TRUE(three.witnesses.empty());
    EXPECT_FALSE(brute_force_kod_subset(c5, {0, 1, 2}));
    EXPECT_TRUE(validate_kod_result(c5, three));

    auto two = is_kod(c5, 2);
    EXPECT_TRUE(two.verdict);
    EXPECT_EQ(two.witnesses.size(), 10u);
    EXPECT_TRUE(validate_kod_result(c5, two));
}

TEST(Kod, PaleyThirteen) {
    Graph g = paley(13);
    for (int k : {3, 4}) {
        auto r = is_kod(g, k);
        EXPECT_TRUE(r.verdict) << k;
        EXPECT_TRUE(r.symmetry_reduced);
        EXPECT_EQ(r.witnesses.size(), k == 3 ? 286u : 715u);
        EXPECT_TRUE(validate_kod_result(g, r));
    }
}

TEST(Kod, ThreeOddDominationOnPaleyPrimes) {
    for (int p : {13, 17, 29}) {
        auto r = is_kod(paley(p), 3);
        EXPECT_TRUE(r.verdict) << p;
        EXPECT_TRUE(validate_kod_result(paley(p), r));
    }
}

TEST(Kod, SymmetryReductionMatchesFullSearch) {
    for (int p : {13, 17}) {
        Graph g = paley(p);
        SearchOptions full;
        full.use_symmetry = false;
        auto reduced = is_kod(g, 3);
        auto direct = is_kod(g, 3, full);
        EXPECT_EQ(reduced.verdict, direct.verdict);
        EXPECT_FALSE(direct.symmetry_reduced);
        EXPECT_EQ(reduced.witnesses.size(), direct.witnesses.size());
        EXPECT_TRUE(validate_kod_result(g, direct));
        EXPECT_TRUE(validate_kod_result(g, reduced));
    }
}

TEST(Kod, Deterministic) {
    Graph g = paley(13);
    auto a = is_kod(g, 4);
    auto b = is_kod(g, 4);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_EQ(a.subsets_examined, b.subsets_examined);
    std::mt19937_64 rng(5);
    Graph h = random_graph(10, 0.5, rng);
    SearchOptions opts;
    EXPECT_EQ(is_kod(h, 3, opts).witnesses, is_kod(h, 3, opts).witnesses);
}

// The search and the per-S brute force agree: every S before the reported
// failure has a labeling and the failing S has none.
TEST(Kod, AgreesWithBruteForce) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; trial++) {
        int n = 4 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.3 + 0.4 * (trial % 3) / 2.0, rng);
        for (int k = 1; k <= 3; k++) {
            auto r = is_kod(g, k);
            EXPECT_TRUE(validate_kod_result(g, r));
            for (VertexSet s : k_subsets(n, k)) {
                if (r.failing_s && *r.failing_s == s) {
                    EXPECT_FALSE(brute_force_kod_subset(g, s));
                    break;
                }
                ASSERT_TRUE(brute_force_kod_subset(g, s)) << emit_graph6(g) << " " << s.str();
            }
        }
    }
}

TEST(Kod, ValidatorRejectsBadWitnesses) {
    Graph g = paley(13);
    auto r = is_kod(g, 4);
    ASSERT_TRUE(r.verdict);
    OddDominationWitness w = r.witnesses[100];
    ASSERT_TRUE(validate_kod_witness(g, w, 4));

    auto inside = w;
    inside.u_sets[0] |= VertexSet::singleton(w.order[3]);
    EXPECT_FALSE(validate_kod_witness(g, inside, 4));

    auto swapped = w;
    std::swap(swapped.order[0], swapped.order[1]);
    EXPECT_FALSE(validate_kod_witness(g, swapped, 4));

    auto emptied = w;
    emptied.u_sets[2] = VertexSet();
    EXPECT_FALSE(validate_kod_witness(g, emptied, 4));

    auto short_order = w;
    short_order.order.pop_back();
    EXPECT_FALSE(validate_kod_witness(g, short_order, 4));

    KodResult tampered = r;
    tampered.witnesses.pop_back();
    EXPECT_FALSE(validate_kod_result(g, tampered));
}

TEST(Kod, Budget) {
    SearchOptions tiny;
    tiny.budget = 10;
    EXPECT_THROW(is_kod(paley(13), 4, tiny), BudgetExceeded);
    EXPECT_THROW(is_kec(paley(29), 3, tiny), BudgetExceeded);
    EXPECT_THROW(strcor_check(paley(13), 4, tiny), BudgetExceeded);
}

TEST(Monotonicity, Examples) {
    EXPECT_TRUE(kod_monotonicity_check(paley(13), 4));
    EXPECT_TRUE(is_kod(paley(13), 2).verdict);
    EXPECT_TRUE(is_kod(paley(13), 1).verdict);
    EXPECT_TRUE(kod_monotonicity_check(cycle_graph(5), 2));
    EXPECT_TRUE(is_kod(cycle_graph(5), 1).verdict);
    EXPECT_TRUE(kod_monotonicity_check(edgeless_graph(3), 1));
}

TEST(Monotonicity, RandomGraphs) {
    std::mt19937_64 rng(7);
    int exercised = 0;
    for (int trial = 0; trial < 60; trial++) {
        Graph g = random_graph(6 + static_cast<int>(rng() % 5), 0.5, rng);
        for (int k = 2; k <= 3; k++) {
            if (is_kod(g, k).verdict) {
                exercised++;
                for (int j = 1; j < k; j++) {
                    EXPECT_TRUE(is_kod(g, j).verdict);
                }
                EXPECT_TRUE(kod_monotonicity_check(g, k));
            }
        }
    }
    EXPECT_GT(exercised, 0);
}

TEST(Strcor, PaleyThirteenCases) {
    Graph g = paley(13);
    VertexSet t1{1, 2, 5, 6};
    EXPECT_TRUE(is_eulerian_induced(g, {7}));
    EXPECT_EQ(odd_neighbourhood(g, {7}) & t1, VertexSet{6});
    VertexSet t2{1, 2, 9, 7};
    VertexSet w{4, 6, 12};
    EXPECT_EQ(induced_edge_count(g, w), 0);
    EXPECT_TRUE(is_eulerian_induced(g, w));
    EXPECT_EQ(odd_neighbourhood(g, w) & t2, VertexSet{1});

    auto r = strcor_check(g, 4);
    EXPECT_TRUE(r.verdict);
    ASSERT_TRUE(r.construction_valid.has_value());
    EXPECT_TRUE(*r.construction_valid);
    EXPECT_EQ(r.constructed.size(), 715u);
    EXPECT_EQ(r.families.size(), 13u + 78u + 286u + 715u);
    for (const auto &f : r.families) {
        ASSERT_EQ(static_cast<int>(f.w_sets.size()), 4 - f.t.size() + 1);
        VertexSet used;
        for (VertexSet x : f.w_sets) {
            EXPECT_FALSE(x.intersects(used));
            EXPECT_FALSE(x.intersects(f.t));
            EXPECT_TRUE(is_eulerian_induced(g, x));
            EXPECT_EQ((odd_neighbourhood(g, x) & f.t).size(), 1);
            used |= x;
        }
    }
}

// When the disjoint-family condition holds, the labeling built from it is a
// valid k-o.d. certificate.
TEST(Strcor, ImpliesKodOnCorpus) {
    int exercised = 0;
    for (const auto &[name, g] : small_corpus()) {
        for (int k = 1; k <= 3 && k <= g.order(); k++) {
            auto r = strcor_check(g, k);
            if (!r.verdict) {
                EXPECT_FALSE(r.construction_valid.has_value());
                continue;
            }
            exercised++;
            EXPECT_TRUE(r.construction_valid.value_or(false)) << name << " k=" << k;
            EXPECT_TRUE(is_kod(g, k).verdict) << name << " k=" << k;
        }
    }
    EXPECT_GT(exercised, 0);
}

TEST(Kec, PaleyFacts) {
    auto p13 = is_kec(paley(13), 3);
    EXPECT_FALSE(p13.verdict);
    ASSERT_TRUE(p13.failure.has_value());
    Graph g13 = paley(13);
    const auto &f = *p13.failure;
    EXPECT_EQ(f.s.size(), 3);
    EXPECT_TRUE(f.t.is_subset_of(f.s));
    for (int z : g13.vertices() - f.s) {
        EXPECT_NE(g13.neighbours(z) & f.s, f.t) << z;
    }

    auto p13_2 = is_kec(paley(13), 2);
    EXPECT_TRUE(p13_2.verdict);
    EXPECT_EQ(p13_2.witnesses.size(), 78u);

    Graph g29 = paley(29);
    auto p29 = is_kec(g29, 3);
    EXPECT_TRUE(p29.verdict);
    EXPECT_EQ(p29.witnesses.size(), 3654u);
    for (const auto &w : p29.witnesses) {
        ASSERT_TRUE(validate_kec_witness(g29, w, 3));
    }
    EXPECT_TRUE(is_kec(paley(17), 2).verdict);
}

TEST(Kec, ValidatorRejectsBadWitness) {
    Graph g = paley(17);
    auto r = is_kec(g, 2);
    ASSERT_TRUE(r.verdict);
    auto w = r.witnesses[3];
    ASSERT_TRUE(validate_kec_witness(g, w, 2));
    auto moved = w;
    moved.vertices[0].second = moved.vertices[1].second;
    EXPECT_FALSE(validate_kec_witness(g, moved, 2));
    auto dropped = w;
    dropped.vertices.pop_back();
    EXPECT_FALSE(validate_kec_witness(g, dropped, 2));
}

TEST(Kec, ImpliesKod) {
    EXPECT_TRUE(kec_implies_kod_check(paley(29), 3));
    EXPECT_TRUE(kec_implies_kod_check(paley(13), 2));
    Graph c5 = cycle_graph(5);
    ASSERT_TRUE(is_kec(c5, 1).verdict);
    EXPECT_TRUE(kec_implies_kod_check(c5, 1));
    auto built = kec_implies_kod(paley(29), 3);
    EXPECT_EQ(built.witnesses.size(), 3654u);
    for (const auto &w : built.witnesses) {
        for (VertexSet u : w.u_sets) {
            EXPECT_EQ(u.size(), 1);
        }
    }
}

TEST(Kec, ImpliesKodOnCorpus) {
    for (const auto &[name, g] : small_corpus()) {
        for (int k = 1; k <= 3 && k <= g.order(); k++) {
            if (is_kec(g, k).verdict) {
                EXPECT_TRUE(kec_implies_kod_check(g, k)) << name << " k=" << k;
                EXPECT_TRUE(is_kod(g, k).verdict) << name << " k=" << k;
            }
        }
    }
}

TEST(Kec, Threshold) {
    EXPECT_EQ(ec_threshold(1), 1u);
    EXPECT_EQ(ec_threshold(2), 16u);
    EXPECT_EQ(ec_threshold(3), 144u);
    EXPECT_EQ(ec_threshold(4), 1024u);
    EXPECT_THROW(ec_threshold(0), std::invalid_argument);
}

TEST(Report, WitnessJsonShape) {
    Graph g = cycle_graph(5);
    auto j = report_json(g, is_kod(g, 3));
    EXPECT_EQ(j["kind"], "kod");
    EXPECT_EQ(j["verdict"], false);
    EXPECT_EQ(j["failure"]["s"], nlohmann::json({0, 1, 2}));
    auto e = report_json(paley(13), is_kec(paley(13), 2));
    EXPECT_EQ(e["kind"], "kec");
    EXPECT_EQ(e["witnesses"].size(), 78u);
    EXPECT_TRUE(e["failure"].is_null());
}

}  // namespace
}  // namespace graphgame
