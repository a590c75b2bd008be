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

#include "graphgame/nonlocality.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "graphgame/game.h"
#include "graphgame/graph6.h"
#include "graphgame/parallel.h"

namespace graphgame {

BudgetExceeded::BudgetExceeded(uint64_t limit, uint64_t examined)
    : std::runtime_error("search budget of " + std::to_string(limit) + " subsets exceeded"),
      limit_(limit),
      examined_(examined) {
}

namespace {

void require_k(const Graph &g, int k) {
    if (k < 1 || k > g.order()) {
        throw std::invalid_argument("k must be in [1, n], got " + std::to_string(k));
    }
}

VertexSet translate(VertexSet s, int shift, int n) {
    VertexSet out;
    for (int v : s) {
        out.insert((v + shift) % n);
    }
    return out;
}

OddDominationWitness translate(const OddDominationWitness &w, int shift, int n) {
    OddDominationWitness out;
    out.s = translate(w.s, shift, n);
    for (int v : w.order) {
        out.order.push_back((v + shift) % n);
    }
    for (VertexSet u : w.u_sets) {
        out.u_sets.push_back(translate(u, shift, n));
    }
    return out;
}

// Lazily walks the eulerian subsets of V \ S in size-then-value order and
// remembers, for each pattern Odd(U) & S, the first U producing it.
class OddPatternFinder {
   public:
    OddPatternFinder(const Graph &g, VertexSet s, ProbeCounter &probes)
        : g_(g), s_(s), walk_(g.vertices() - s), probes_(probes), seen_(size_t{1} << s.size(), false) {
    }

    std::optional<VertexSet> find(int v, VertexSet remaining) {
        const VertexSet target = VertexSet::singleton(v);
        for (const auto &[pattern, u] : firsts_) {
            if ((pattern & remaining) == target) {
                return u;
            }
        }
        while (advance()) {
            const auto &[pattern, u] = firsts_.back();
            if ((pattern & remaining) == target) {
                return u;
            }
        }
        return std::nullopt;
    }

   private:
    // Scans forward until a new pattern is recorded. False when exhausted.
    bool advance() {
        while (!exhausted_) {
            bool more = started_ ? walk_.next(cursor_) : walk_.first(cursor_);
            started_ = true;
            if (!more) {
                exhausted_ = true;
                return false;
            }
            probes_.charge();
            VertexSet odd = odd_neighbourhood(g_, cursor_);
            if (odd.intersects(cursor_)) {
                continue;
            }
            VertexSet pattern = odd & s_;
            uint64_t key = extract_bits(pattern.bits(), s_.bits());
            if (!seen_[key]) {
                seen_[key] = true;
                firsts_.emplace_back(pattern, cursor_);
                if (firsts_.size() == seen_.size()) {
                    exhausted_ = true;
                }
                return true;
            }
        }
        return false;
    }

    const Graph &g_;
    VertexSet s_;
    SizeMajorSubsets walk_;
    ProbeCounter &probes_;
    std::vector<bool> seen_;
    std::vector<std::pair<VertexSet, VertexSet>> firsts_;
    VertexSet cursor_;
    bool started_ = false;
    bool exhausted_ = false;
};

class LabelingSearch {
   public:
    LabelingSearch(const Graph &g, VertexSet s, ProbeCounter &probes)
        : finder_(g, s, probes), dead_(size_t{1} << s.size(), false), s_(s) {
    }

    std::optional<OddDominationWitness> run() {
        if (!extend(s_)) {
            return std::nullopt;
        }
        return OddDominationWitness{s_, order_, u_sets_};
    }

   private:
    bool extend(VertexSet remaining) {
        if (remaining.empty()) {
            return true;
        }
        uint64_t key = extract_bits(remaining.bits(), s_.bits());
        if (dead_[key]) {
            return false;
        }
        for (int v : remaining) {
            auto u = finder_.find(v, remaining);
            if (!u) {
                continue;
            }
            order_.push_back(v);
            u_sets_.push_back(*u);
            if (extend(remaining - VertexSet::singleton(v))) {
                return true;
            }
            order_.pop_back();
            u_sets_.pop_back();
        }
        dead_[key] = true;
        return false;
    }

    OddPatternFinder finder_;
    std::vector<bool> dead_;
    VertexSet s_;
    std::vector<int> order_;
    std::vector<VertexSet> u_sets_;
};

}  // namespace

KodResult is_kod(const Graph &g, int k, const SearchOptions &options) {
    require_k(g, k);
    const int n = g.order();
    ProbeCounter probes(options.budget);
    KodResult result;
    result.k = k;
    result.symmetry_reduced = options.use_symmetry && g.has_cyclic_symmetry();

    std::vector<VertexSet> all = k_subsets(n, k);
    std::vector<VertexSet> searched;
    if (result.symmetry_reduced) {
        for (VertexSet s : all) {
            if (s.contains(0)) {
                searched.push_back(s);
            }
        }
    } else {
        searched = all;
    }

    std::vector<std::optional<OddDominationWitness>> found(searched.size());
    parallel_for(searched.size(), [&](size_t i) { found[i] = LabelingSearch(g, searched[i], probes).run(); });
    result.subsets_examined = probes.count();

    std::unordered_map<uint64_t, size_t> index;
    for (size_t i = 0; i < searched.size(); i++) {
        index[searched[i].bits()] = i;
    }
    result.verdict = true;
    for (VertexSet s : all) {
        int shift = result.symmetry_reduced ? s.min() : 0;
        VertexSet base = translate(s, n - shift, n);
        const auto &w = found[index.at(base.bits())];
        if (!w) {
            result.verdict = false;
            result.failing_s = s;
            result.witnesses.clear();
            break;
        }
        result.witnesses.push_back(shift == 0 ? *w : translate(*w, shift, n));
    }
    return result;
}

bool validate_kod_witness(const Graph &g, const OddDominationWitness &w, int k) {
    if (w.s.size() != k || static_cast<int>(w.order.size()) != k || static_cast<int>(w.u_sets.size()) != k) {
        return false;
    }
    if (!w.s.is_subset_of(g.vertices())) {
        return false;
    }
    VertexSet labelled;
    for (int v : w.order) {
        if (!w.s.contains(v) || labelled.contains(v)) {
            return false;
        }
        labelled.insert(v);
    }
    VertexSet outside = g.vertices() - w.s;
    VertexSet tail = w.s;
    for (int i = 0; i < k; i++) {
        VertexSet u = w.u_sets[i];
        if (!u.is_subset_of(outside) || !is_eulerian_induced(g, u)) {
            return false;
        }
        if ((odd_neighbourhood(g, u) & tail) != VertexSet::singleton(w.order[i])) {
            return false;
        }
        tail.erase(w.order[i]);
    }
    return true;
}

bool brute_force_kod_subset(const Graph &g, VertexSet s) {
    VertexSet outside = g.vertices() - s;
    if (outside.size() > 24) {
        throw InstanceTooLarge("brute-force k-o.d. check needs at most 24 vertices outside S");
    }
    std::vector<VertexSet> patterns;
    VertexSet u;
    while (next_subset_ascending(outside, u)) {
        if (is_eulerian_induced(g, u)) {
            patterns.push_back(odd_neighbourhood(g, u) & s);
        }
    }
    std::vector<int> order = s.to_vector();
    do {
        bool ok = true;
        VertexSet tail = s;
        for (int v : order) {
            bool any = std::any_of(patterns.begin(), patterns.end(),
                                   [&](VertexSet p) { return (p & tail) == VertexSet::singleton(v); });
            if (!any) {
                ok = false;
                break;
            }
            tail.erase(v);
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

bool validate_kod_result(const Graph &g, const KodResult &result) {
    const int k = result.k;
    if (result.verdict) {
        std::vector<VertexSet> all = k_subsets(g.order(), k);
        if (result.witnesses.size() != all.size()) {
            return false;
        }
        for (size_t i = 0; i < all.size(); i++) {
            if (result.witnesses[i].s != all[i] || !validate_kod_witness(g, result.witnesses[i], k)) {
                return false;
            }
        }
        return true;
    }
    if (!result.failing_s || result.failing_s->size() != k) {
        return false;
    }
    return !brute_force_kod_subset(g, *result.failing_s);
}

bool kod_monotonicity_check(const Graph &g, int k, const SearchOptions &options) {
    if (k < 2) {
        return true;
    }
    KodResult top = is_kod(g, k, options);
    if (!top.verdict) {
        return true;
    }
    for (int j = 1; j < k; j++) {
        KodResult r = is_kod(g, j, options);
        if (!r.verdict || !validate_kod_result(g, r)) {
            return false;
        }
    }
    // Removing v_l from a labeling keeps every other U_i valid.
    for (const auto &w : top.witnesses) {
        for (int drop = 0; drop < k; drop++) {
            OddDominationWitness smaller;
            smaller.s = w.s - VertexSet::singleton(w.order[drop]);
            for (int i = 0; i < k; i++) {
                if (i != drop) {
                    smaller.order.push_back(w.order[i]);
                    smaller.u_sets.push_back(w.u_sets[i]);
                }
            }
            if (!validate_kod_witness(g, smaller, k - 1)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

bool odd_meets_once(const Graph &g, VertexSet w, VertexSet t) {
    return is_eulerian_induced(g, w) && (odd_neighbourhood(g, w) & t).size() == 1;
}

bool extend_family(const Graph &g, const SizeMajorSubsets &walk, VertexSet t, int count, VertexSet used,
                   VertexSet start, bool from_first, ProbeCounter &probes, std::vector<VertexSet> &out) {
    VertexSet w = start;
    bool more = from_first ? walk.first(w) : walk.next(w);
    for (; more; more = walk.next(w)) {
        probes.charge();
        if (w.intersects(used) || !odd_meets_once(g, w, t)) {
            continue;
        }
        out.push_back(w);
        if (count == 1 || extend_family(g, walk, t, count - 1, used | w, w, false, probes, out)) {
            return true;
        }
        out.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<VertexSet>> find_disjoint_family(const Graph &g, VertexSet t, int count,
                                                           ProbeCounter &probes) {
    std::vector<VertexSet> out;
    if (count <= 0) {
        return out;
    }
    SizeMajorSubsets walk(g.vertices() - t);
    if (extend_family(g, walk, t, count, VertexSet(), VertexSet(), true, probes, out)) {
        return out;
    }
    return std::nullopt;
}

StrcorResult strcor_check(const Graph &g, int k, const SearchOptions &options) {
    require_k(g, k);
    const int n = g.order();
    ProbeCounter probes(options.budget);
    StrcorResult result;
    result.k = k;

    std::vector<VertexSet> ts;
    for (int j = 1; j <= k; j++) {
        for (VertexSet t : k_subsets(n, j)) {
            ts.push_back(t);
        }
    }
    std::vector<std::optional<std::vector<VertexSet>>> found(ts.size());
    parallel_for(ts.size(), [&](size_t i) {
        found[i] = find_disjoint_family(g, ts[i], k - ts[i].size() + 1, probes);
    });
    result.subsets_examined = probes.count();

    std::unordered_map<uint64_t, size_t> index;
    result.verdict = true;
    for (size_t i = 0; i < ts.size(); i++) {
        if (!found[i]) {
            result.verdict = false;
            result.failing_t = ts[i];
            result.families.clear();
            return result;
        }
        index[ts[i].bits()] = i;
        result.families.push_back({ts[i], *found[i]});
    }

    bool all_valid = true;
    for (VertexSet s : k_subsets(n, k)) {
        OddDominationWitness w;
        w.s = s;
        VertexSet labelled;
        for (int i = 0; i < k; i++) {
            VertexSet t = s - labelled;
            const auto &family = result.families[index.at(t.bits())].w_sets;
            auto pick = std::find_if(family.begin(), family.end(), [&](VertexSet x) { return !x.intersects(labelled); });
            if (pick == family.end()) {
                all_valid = false;
                break;
            }
            VertexSet hit = odd_neighbourhood(g, *pick) & t;
            w.order.push_back(hit.min());
            w.u_sets.push_back(*pick);
            labelled |= hit;
        }
        all_valid = all_valid && validate_kod_witness(g, w, k);
        result.constructed.push_back(std::move(w));
    }
    result.construction_valid = all_valid;
    return result;
}

KecResult is_kec(const Graph &g, int k, const SearchOptions &options) {
    require_k(g, k);
    const int n = g.order();
    ProbeCounter probes(options.budget);
    KecResult result;
    result.k = k;

    std::vector<VertexSet> all = k_subsets(n, k);
    std::vector<EcWitness> witnesses(all.size());
    std::vector<std::optional<VertexSet>> missing(all.size());
    parallel_for(all.size(), [&](size_t i) {
        VertexSet s = all[i];
        std::unordered_map<uint64_t, int> first;
        for (int z : g.vertices() - s) {
            probes.charge();
            first.try_emplace((g.neighbours(z) & s).bits(), z);
        }
        EcWitness w{s, {}};
        VertexSet t;
        do {
            auto it = first.find(t.bits());
            if (it == first.end()) {
                missing[i] = t;
                return;
            }
            w.vertices.emplace_back(t, it->second);
        } while (next_subset_ascending(s, t));
        witnesses[i] = std::move(w);
    });
    result.subsets_examined = probes.count();

    result.verdict = true;
    for (size_t i = 0; i < all.size(); i++) {
        if (missing[i]) {
            result.verdict = false;
            result.failure = EcFailure{all[i], *missing[i]};
            return result;
        }
    }
    result.witnesses = std::move(witnesses);
    return result;
}

bool validate_kec_witness(const Graph &g, const EcWitness &w, int k) {
    if (w.s.size() != k || w.vertices.size() != (size_t{1} << k)) {
        return false;
    }
    std::vector<bool> seen(size_t{1} << k, false);
    for (const auto &[t, z] : w.vertices) {
        if (!t.is_subset_of(w.s) || z < 0 || z >= g.order() || w.s.contains(z)) {
            return false;
        }
        uint64_t key = extract_bits(t.bits(), w.s.bits());
        if (seen[key]) {
            return false;
        }
        seen[key] = true;
        for (int v : w.s) {
            if (g.adjacent(z, v) != t.contains(v)) {
                return false;
            }
        }
    }
    return true;
}

KecImpliesKodResult kec_implies_kod(const Graph &g, int k, const SearchOptions &options) {
    KecResult ec = is_kec(g, k, options);
    KecImpliesKodResult out;
    if (!ec.verdict) {
        return out;
    }
    out.holds = true;
    for (const auto &ew : ec.witnesses) {
        OddDominationWitness w;
        w.s = ew.s;
        w.order = ew.s.to_vector();
        VertexSet prefix;
        for (int v : w.order) {
            prefix.insert(v);
            auto it = std::find_if(ew.vertices.begin(), ew.vertices.end(),
                                   [&](const auto &entry) { return entry.first == prefix; });
            w.u_sets.push_back(VertexSet::singleton(it->second));
        }
        out.holds = out.holds && validate_kod_witness(g, w, k);
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

bool kec_implies_kod_check(const Graph &g, int k, const SearchOptions &options) {
    return kec_implies_kod(g, k, options).holds;
}

uint64_t ec_threshold(int k) {
    if (k < 1 || k > 16) {
        throw std::invalid_argument("ec_threshold needs 1 <= k <= 16");
    }
    uint64_t kk = static_cast<uint64_t>(k);
    return kk * kk * (uint64_t{1} << (2 * k - 2));
}

nlohmann::json vertex_list_json(VertexSet s) {
    return s.to_vector();
}

nlohmann::json witness_json(const OddDominationWitness &w) {
    nlohmann::json u = nlohmann::json::array();
    for (VertexSet x : w.u_sets) {
        u.push_back(vertex_list_json(x));
    }
    return {{"s", vertex_list_json(w.s)}, {"order", w.order}, {"u", u}};
}

nlohmann::json witness_json(const EcWitness &w) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto &[t, z] : w.vertices) {
        cases.push_back({{"t", vertex_list_json(t)}, {"vertex", z}});
    }
    return {{"s", vertex_list_json(w.s)}, {"cases", cases}};
}

nlohmann::json report_json(const Graph &g, const KodResult &r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto &w : r.witnesses) {
        witnesses.push_back(witness_json(w));
    }
    nlohmann::json failure = nullptr;
    if (r.failing_s) {
        failure = {{"s", vertex_list_json(*r.failing_s)}};
    }
    return {{"graph", emit_graph6(g)},
            {"k", r.k},
            {"kind", "kod"},
            {"verdict", r.verdict},
            {"witnesses", witnesses},
            {"failure", failure},
            {"budget", {{"subsets_examined", r.subsets_examined}}}};
}

nlohmann::json report_json(const Graph &g, const KecResult &r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto &w : r.witnesses) {
        witnesses.push_back(witness_json(w));
    }
    nlohmann::json failure = nullptr;
    if (r.failure) {
        failure = {{"s", vertex_list_json(r.failure->s)}, {"t", vertex_list_json(r.failure->t)}};
    }
    return {{"graph", emit_graph6(g)},
            {"k", r.k},
            {"kind", "kec"},
            {"verdict", r.verdict},
            {"witnesses", witnesses},
            {"failure", failure},
            {"budget", {{"subsets_examined", r.subsets_examined}}}};
}

}  // namespace graphgame
