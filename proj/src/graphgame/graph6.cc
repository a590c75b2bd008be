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

#include "graphgame/graph6.h"

namespace graphgame {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

}  // namespace

const char *to_string(Graph6ErrorKind kind) {
    switch (kind) {
        case Graph6ErrorKind::malformed_header:
            return "malformed_header";
        case Graph6ErrorKind::truncated_bits:
            return "truncated_bits";
        case Graph6ErrorKind::trailing_garbage:
            return "trailing_garbage";
        case Graph6ErrorKind::invalid_byte:
            return "invalid_byte";
        case Graph6ErrorKind::nonzero_padding:
            return "nonzero_padding";
    }
    return "unknown";
}

Graph6Error::Graph6Error(Graph6ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string("graph6 ") + to_string(kind) + ": " + detail), kind_(kind) {
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) {
        throw Graph6Error(Graph6ErrorKind::malformed_header, "empty input");
    }
    size_t pos = 0;
    int n;
    auto header_byte = [&](size_t i) {
        if (i >= text.size()) {
            throw Graph6Error(Graph6ErrorKind::malformed_header, "header cut short");
        }
        int c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > kMaxByte) {
            throw Graph6Error(Graph6ErrorKind::malformed_header, "header byte " + std::to_string(c) + " out of range");
        }
        return c - kBias;
    };
    if (static_cast<unsigned char>(text[0]) == kMaxByte) {
        if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kMaxByte) {
            throw Graph6Error(Graph6ErrorKind::malformed_header, "orders above 258047 are not supported");
        }
        n = (header_byte(1) << 12) | (header_byte(2) << 6) | header_byte(3);
        pos = 4;
        if (n < 63) {
            throw Graph6Error(Graph6ErrorKind::malformed_header, "long header used for small order");
        }
    } else {
        n = header_byte(0);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices) {
        throw Graph6Error(Graph6ErrorKind::malformed_header, "order " + std::to_string(n) + " outside [1, 64]");
    }

    size_t bit_count = static_cast<size_t>(n) * (n - 1) / 2;
    size_t byte_count = (bit_count + 5) / 6;
    if (text.size() - pos < byte_count) {
        throw Graph6Error(Graph6ErrorKind::truncated_bits,
                          "need " + std::to_string(byte_count) + " data bytes, have " + std::to_string(text.size() - pos));
    }
    if (text.size() - pos > byte_count) {
        throw Graph6Error(Graph6ErrorKind::trailing_garbage,
                          std::to_string(text.size() - pos - byte_count) + " extra bytes");
    }

    Graph g(n);
    size_t bit = 0;
    for (size_t b = 0; b < byte_count; b++) {
        int c = static_cast<unsigned char>(text[pos + b]);
        if (c < kBias || c > kMaxByte) {
            throw Graph6Error(Graph6ErrorKind::invalid_byte, "data byte " + std::to_string(c) + " out of range");
        }
        int word = c - kBias;
        for (int shift = 5; shift >= 0; shift--, bit++) {
            bool set = (word >> shift) & 1;
            if (bit >= bit_count) {
                if (set) {
                    throw Graph6Error(Graph6ErrorKind::nonzero_padding, "padding bit set");
                }
                continue;
            }
            if (set) {
                // Column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
                int v = 1;
                size_t before = 0;
                while (before + v <= bit) {
                    before += v;
                    v++;
                }
                int u = static_cast<int>(bit - before);
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph &g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kBias);
    } else {
        out += static_cast<char>(kMaxByte);
        out += static_cast<char>(((n >> 12) & 63) + kBias);
        out += static_cast<char>(((n >> 6) & 63) + kBias);
        out += static_cast<char>((n & 63) + kBias);
    }
    int word = 0;
    int filled = 0;
    for (int v = 1; v < n; v++) {
        for (int u = 0; u < v; u++) {
            word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(word + kBias);
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out += static_cast<char>((word << (6 - filled)) + kBias);
    }
    return out;
}

nlohmann::json to_edge_list_json(const Graph &g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return {{"n", g.order()}, {"edges", edges}};
}

Graph from_edge_list_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("edges") ||
        !j["edges"].is_array()) {
        throw std::invalid_argument("edge list JSON needs integer \"n\" and array \"edges\"");
    }
    Graph g(j["n"].get<int>());
    for (const auto &e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw std::invalid_argument("each edge must be a pair of integers");
        }
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

}  // namespace graphgame
