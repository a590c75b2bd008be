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

#ifndef GRAPHGAME_VERTEX_SET_H
#define GRAPHGAME_VERTEX_SET_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace graphgame {

/// Largest supported graph order. A vertex set is one machine word.
inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} stored as a bitmask. Bit v is vertex v.
///
/// Used for every vertex-indexed set in the project: neighbourhoods, the
/// eulerian sets D, their odd neighbourhoods, question and answer vectors.
class VertexSet {
   public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(uint64_t bits) : bits_(bits) {
    }
    constexpr VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) {
            bits_ |= uint64_t{1} << v;
        }
    }

    /// {0, ..., n-1}.
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet singleton(int v) {
        return VertexSet(uint64_t{1} << v);
    }

    constexpr uint64_t bits() const {
        return bits_;
    }
    constexpr bool empty() const {
        return bits_ == 0;
    }
    constexpr int size() const {
        return std::popcount(bits_);
    }
    constexpr bool contains(int v) const {
        return (bits_ >> v) & 1;
    }
    constexpr bool parity() const {
        return std::popcount(bits_) & 1;
    }
    constexpr bool is_subset_of(VertexSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    constexpr bool intersects(VertexSet other) const {
        return (bits_ & other.bits_) != 0;
    }
    /// Lowest member. Undefined on the empty set.
    constexpr int min() const {
        return std::countr_zero(bits_);
    }

    constexpr void insert(int v) {
        bits_ |= uint64_t{1} << v;
    }
    constexpr void erase(int v) {
        bits_ &= ~(uint64_t{1} << v);
    }
    constexpr void toggle(int v) {
        bits_ ^= uint64_t{1} << v;
    }

    constexpr VertexSet operator|(VertexSet o) const {
        return VertexSet(bits_ | o.bits_);
    }
    constexpr VertexSet operator&(VertexSet o) const {
        return VertexSet(bits_ & o.bits_);
    }
    constexpr VertexSet operator^(VertexSet o) const {
        return VertexSet(bits_ ^ o.bits_);
    }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const {
        return VertexSet(bits_ & ~o.bits_);
    }
    constexpr VertexSet &operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet &operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet &operator^=(VertexSet o) {
        bits_ ^= o.bits_;
        return *this;
    }
    constexpr VertexSet &operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    constexpr bool operator==(const VertexSet &) const = default;
    constexpr auto operator<=>(const VertexSet &) const = default;

    class iterator {
       public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int *;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(uint64_t rest) : rest_(rest) {
        }
        constexpr int operator*() const {
            return std::countr_zero(rest_);
        }
        constexpr iterator &operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator &) const = default;

       private:
        uint64_t rest_ = 0;
    };
    constexpr iterator begin() const {
        return iterator(bits_);
    }
    constexpr iterator end() const {
        return iterator(0);
    }

    std::vector<int> to_vector() const;
    /// "{0,1,4}".
    std::string str() const;
    /// n characters, character i is '1' when i is a member.
    std::string bit_string(int n) const;

   private:
    uint64_t bits_ = 0;
};

/// Scatters the low bits of `compact` onto the positions of `mask`.
constexpr uint64_t deposit_bits(uint64_t compact, uint64_t mask) {
    uint64_t out = 0;
    while (mask != 0 && compact != 0) {
        uint64_t low = mask & (~mask + 1);
        if (compact & 1) {
            out |= low;
        }
        compact >>= 1;
        mask ^= low;
    }
    return out;
}

/// Gathers the bits of `value` at the positions of `mask` into the low bits.
constexpr uint64_t extract_bits(uint64_t value, uint64_t mask) {
    uint64_t out = 0;
    int k = 0;
    while (mask != 0) {
        uint64_t low = mask & (~mask + 1);
        if (value & low) {
            out |= uint64_t{1} << k;
        }
        ++k;
        mask ^= low;
    }
    return out;
}

/// Advances `current` to the next subset of `universe` in ascending integer
/// order. Returns false once `current` is the universe itself.
inline bool next_subset_ascending(VertexSet universe, VertexSet &current) {
    if (current == universe) {
        return false;
    }
    current = VertexSet(((current.bits() | ~universe.bits()) + 1) & universe.bits());
    return true;
}

/// Walks the nonempty subsets of a universe ordered first by size, then by
/// ascending integer value. Positions are plain subsets so a walk can resume
/// after any element.
class SizeMajorSubsets {
   public:
    explicit SizeMajorSubsets(VertexSet universe) : universe_(universe), width_(universe.size()) {
    }

    VertexSet universe() const {
        return universe_;
    }

    /// The first nonempty subset, or false when the universe is empty.
    bool first(VertexSet &out) const {
        if (width_ == 0) {
            return false;
        }
        out = VertexSet(deposit_bits(1, universe_.bits()));
        return true;
    }

    /// Advances `current` (a nonempty subset of the universe). Returns false
    /// once the full universe has been passed.
    bool next(VertexSet &current) const {
        uint64_t c = extract_bits(current.bits(), universe_.bits());
        int size = std::popcount(c);
        uint64_t limit = width_ >= 64 ? ~uint64_t{0} : (uint64_t{1} << width_);
        // Gosper: next larger integer with the same popcount.
        uint64_t low = c & (~c + 1);
        uint64_t ripple = c + low;
        uint64_t next = ripple == 0 ? 0 : (((ripple ^ c) >> 2) / low) | ripple;
        if (ripple == 0 || (width_ < 64 && next >= limit)) {
            if (size == width_) {
                return false;
            }
            next = (uint64_t{1} << (size + 1)) - 1;
        }
        current = VertexSet(deposit_bits(next, universe_.bits()));
        return true;
    }

   private:
    VertexSet universe_;
    int width_;
};

/// All k-element subsets of {0..n-1} in lexicographic order of their sorted
/// member lists.
std::vector<VertexSet> k_subsets(int n, int k);

}  // namespace graphgame

#endif
