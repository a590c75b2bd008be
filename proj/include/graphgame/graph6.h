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

#ifndef GRAPHGAME_GRAPH6_H
#define GRAPHGAME_GRAPH6_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "graphgame/graph.h"

namespace graphgame {

enum class Graph6ErrorKind {
    /// Empty input, header byte outside the printable range, or an order
    /// outside [1, 64].
    malformed_header,
    /// Fewer data bytes than the upper triangle needs.
    truncated_bits,
    /// Data bytes after the upper triangle.
    trailing_garbage,
    /// A data byte outside [63, 126].
    invalid_byte,
    /// Set bits in the zero padding of the final byte.
    nonzero_padding,
};

const char *to_string(Graph6ErrorKind kind);

class Graph6Error : public std::runtime_error {
   public:
    Graph6Error(Graph6ErrorKind kind, const std::string &detail);
    Graph6ErrorKind kind() const {
        return kind_;
    }

   private:
    Graph6ErrorKind kind_;
};

/// Decodes one graph6 string (no ">>graph6<<" prefix, no newline).
Graph parse_graph6(std::string_view text);

/// Encodes in graph6. Orders 63 and 64 use the 4-byte '~' header.
std::string emit_graph6(const Graph &g);

/// {"n": int, "edges": [[u, v], ...]} with u < v, sorted.
nlohmann::json to_edge_list_json(const Graph &g);
/// Inverse of `to_edge_list_json`. Accepts edges in any order or
/// orientation; throws std::invalid_argument on schema violations.
Graph from_edge_list_json(const nlohmann::json &j);

}  // namespace graphgame

#endif
