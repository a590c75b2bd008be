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

#ifndef GRAPHGAME_GRAPH_H
#define GRAPHGAME_GRAPH_H

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphgame/vertex_set.h"

namespace graphgame {

/// A simple undirected graph on vertices {0, ..., n-1}, n <= 64, stored as
/// symmetric adjacency rows over GF(2).
///
/// The graph is both the board of a graph game and the specification of the
/// graph state shared by quantum players.
class Graph {
   public:
    /// Edgeless graph on n vertices. Throws std::invalid_argument unless
    /// 1 <= n <= 64.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int order() const {
        return n_;
    }
    VertexSet vertices() const {
        return VertexSet::range(n_);
    }
    VertexSet neighbours(int v) const {
        return adj_[v];
    }
    std::span<const VertexSet> rows() const {
        return {adj_.data(), static_cast<size_t>(n_)};
    }
    bool adjacent(int u, int v) const {
        return adj_[u].contains(v);
    }
    int degree(int v) const {
        return adj_[v].size();
    }
    int edge_count() const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// Adds edge {u, v}. Self loops are rejected.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// True for graphs built by `paley`, whose vertex maps x -> x + c mod n
    /// are automorphisms. Never inferred from the adjacency structure.
    bool has_cyclic_symmetry() const {
        return cyclic_symmetry_;
    }

    /// Image of the graph under the relabeling v -> perm[v].
    Graph relabeled(std::span<const int> perm) const;
    Graph complement() const;

    /// Compares order and adjacency only.
    bool operator==(const Graph &other) const;

    /// Checks symmetry, irreflexivity and the absence of bits above n-1.
    bool is_well_formed() const;

   private:
    friend Graph paley(int n);

    int n_;
    std::array<VertexSet, kMaxVertices> adj_{};
    bool cyclic_symmetry_ = false;
};

bool is_prime(int n);

/// Paley graph on Z_n: a ~ b iff a - b is a nonzero square mod n.
/// Requires n prime with n = 1 mod 4 and n <= 64; throws
/// std::invalid_argument otherwise (prime powers are not supported).
Graph paley(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph edgeless_graph(int n);

/// Vertices with an odd number of neighbours in `d`. This is the GF(2)
/// product of the adjacency matrix with the indicator vector of `d`.
inline VertexSet odd_neighbourhood(const Graph &g, VertexSet d) {
    VertexSet out;
    for (int v : d) {
        out ^= g.neighbours(v);
    }
    return out;
}

/// Complement of `odd_neighbourhood` within the vertex set.
inline VertexSet even_neighbourhood(const Graph &g, VertexSet d) {
    return g.vertices() - odd_neighbourhood(g, d);
}

/// True iff the subgraph induced by `d` has every degree even, i.e.
/// d is a subset of Even(d).
inline bool is_eulerian_induced(const Graph &g, VertexSet d) {
    return !d.intersects(odd_neighbourhood(g, d));
}

/// Number of edges with both endpoints in `d`.
int induced_edge_count(const Graph &g, VertexSet d);

/// Every eulerian-induced subset of `restrict_to` (the empty set included),
/// in ascending integer order.
std::vector<VertexSet> enumerate_eulerian(const Graph &g, VertexSet restrict_to);

/// Breadth-first two-colouring of every component.
bool is_bipartite(const Graph &g);
bool is_connected(const Graph &g);

}  // namespace graphgame

#endif
