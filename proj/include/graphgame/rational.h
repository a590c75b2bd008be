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

#ifndef GRAPHGAME_RATIONAL_H
#define GRAPHGAME_RATIONAL_H

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphgame {

/// Nonnegative exact fraction in lowest terms.
struct Rational {
    uint64_t num = 0;
    uint64_t den = 1;

    constexpr Rational() = default;
    constexpr Rational(uint64_t numerator, uint64_t denominator) : num(numerator), den(denominator) {
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        uint64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    constexpr bool operator==(const Rational &) const = default;
    constexpr bool operator<(const Rational &o) const {
        return static_cast<unsigned __int128>(num) * o.den < static_cast<unsigned __int128>(o.num) * den;
    }
    constexpr bool is_one() const {
        return num == den;
    }
    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    /// "p/q", always with a denominator.
    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace graphgame

#endif
