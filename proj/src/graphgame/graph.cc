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

#include "graphgame/graph.h"

#include <stdexcept>

namespace graphgame {

std::vector<int> VertexSet::to_vector() const {
    return {begin(), end()};
}

std::string VertexSet::str() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(v);
    }
    out += '}';
    return out;
}

std::string VertexSet::bit_string(int n) const {
    std::string out(n, '0');
    for (int i = 0; i < n; i++) {
        if (contains(i)) {
            out[i] = '1';
        }
    }
    return out;
}

std::vector<VertexSet> k_subsets(int n, int k) {
    std::vector<VertexSet> out;
    if (k < 0 || k > n) {
        return out;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; i++) {
        idx[i] = i;
    }
    while (true) {
        VertexSet s;
        for (int v : idx) {
            s.insert(v);
        }
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) {
            i--;
        }
        if (i < 0) {
            break;
        }
        idx[i]++;
        for (int j = i + 1; j < k; j++) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
    }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self loops are not allowed");
    }
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; v++) {
        twice += adj_[v].size();
    }
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; u++) {
        for (int v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw std::invalid_argument("permutation size does not match graph order");
    }
    Graph out(n_);
    for (auto [u, v] : edges()) {
        out.add_edge(perm[u], perm[v]);
    }
    return out;
}

Graph Graph::complement() const {
    Graph out(n_);
    VertexSet all = vertices();
    for (int v = 0; v < n_; v++) {
        out.adj_[v] = all - adj_[v] - VertexSet::singleton(v);
    }
    return out;
}

bool Graph::operator==(const Graph &other) const {
    if (n_ != other.n_) {
        return false;
    }
    for (int v = 0; v < n_; v++) {
        if (adj_[v] != other.adj_[v]) {
            return false;
        }
    }
    return true;
}

bool Graph::is_well_formed() const {
    VertexSet all = vertices();
    for (int v = 0; v < kMaxVertices; v++) {
        if (v >= n_) {
            if (!adj_[v].empty()) {
                return false;
            }
            continue;
        }
        if (adj_[v].contains(v) || !adj_[v].is_subset_of(all)) {
            return false;
        }
        for (int u : adj_[v]) {
            if (!adj_[u].contains(v)) {
                return false;
            }
        }
    }
    return true;
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Graph paley(int n) {
    if (n > kMaxVertices || !is_prime(n) || n % 4 != 1) {
        throw std::invalid_argument(
            "paley(" + std::to_string(n) + "): order must be a prime congruent to 1 mod 4 and at most 64");
    }
    std::vector<bool> square(n, false);
    for (int m = 1; m < n; m++) {
        square[(m * m) % n] = true;
    }
    Graph g(n);
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            if (square[(a - b + n) % n]) {
                g.add_edge(a, b);
            }
        }
    }
    g.cyclic_symmetry_ = true;
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices");
    }
    Graph g(n);
    for (int v = 0; v < n; v++) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; v++) {
        g.add_edge(v, v + 1);
    }
    return g;
}

Graph edgeless_graph(int n) {
    return Graph(n);
}

int induced_edge_count(const Graph &g, VertexSet d) {
    int twice = 0;
    for (int v : d) {
        twice += (g.neighbours(v) & d).size();
    }
    return twice / 2;
}

std::vector<VertexSet> enumerate_eulerian(const Graph &g, VertexSet restrict_to) {
    std::vector<VertexSet> out;
    VertexSet d;
    do {
        if (is_eulerian_induced(g, d)) {
            out.push_back(d);
        }
    } while (next_subset_ascending(restrict_to, d));
    return out;
}

bool is_bipartite(const Graph &g) {
    int n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    for (int start = 0; start < n; start++) {
        if (colour[start] >= 0) {
            continue;
        }
        colour[start] = 0;
        queue.assign(1, start);
        for (size_t head = 0; head < queue.size(); head++) {
            int u = queue[head];
            for (int v : g.neighbours(u)) {
                if (colour[v] < 0) {
                    colour[v] = colour[u] ^ 1;
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const Graph &g) {
    VertexSet seen = VertexSet::singleton(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) {
            next |= g.neighbours(v);
        }
        frontier = next - seen;
        seen |= next;
    }
    return seen == g.vertices();
}

}  // namespace graphgame
