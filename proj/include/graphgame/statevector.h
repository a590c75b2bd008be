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

#ifndef GRAPHGAME_STATEVECTOR_H
#define GRAPHGAME_STATEVECTOR_H

// Dense state-vector oracle for the graph state strategy. Independent of the
// GF(2) path in quantum.h: it builds amplitudes and applies measurement basis
// changes explicitly.

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "graphgame/game.h"
#include "graphgame/graph.h"
#include "graphgame/quantum.h"

namespace graphgame {

template <typename Scalar>
using StateVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using ProbabilityVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline void require_statevector_order(int n) {
    if (n > kMaxStateVectorOrder) {
        throw InstanceTooLarge("state vectors are limited to " + std::to_string(kMaxStateVectorOrder) +
                               " qubits, got " + std::to_string(n));
    }
}

/// |G> = prod_{uv in E} CZ_uv |+>^n. Basis index bit i is qubit i; the
/// amplitude of z is (-1)^|E(z)| / sqrt(2^n).
template <typename Scalar = double>
StateVector<Scalar> graph_state(const Graph &g) {
    const int n = g.order();
    require_statevector_order(n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    const Scalar amp = Scalar(1) / std::sqrt(static_cast<Scalar>(dim));
    StateVector<Scalar> psi(dim);
    for (Eigen::Index z = 0; z < dim; z++) {
        bool negative = induced_edge_count(g, VertexSet(static_cast<uint64_t>(z))) & 1;
        psi[z] = std::complex<Scalar>(negative ? -amp : amp, 0);
    }
    return psi;
}

template <typename Scalar>
void apply_hadamard(StateVector<Scalar> &psi, int qubit) {
    const Scalar s = Scalar(1) / std::sqrt(Scalar(2));
    const Eigen::Index bit = Eigen::Index{1} << qubit;
    for (Eigen::Index i = 0; i < psi.size(); i++) {
        if (i & bit) {
            continue;
        }
        std::complex<Scalar> a = psi[i];
        std::complex<Scalar> b = psi[i | bit];
        psi[i] = s * (a + b);
        psi[i | bit] = s * (a - b);
    }
}

/// Applies the Pauli operator (prod_{i in x_part} X_i)(prod_{j in z_part} Z_j):
/// the Z factors act first.
template <typename Scalar>
StateVector<Scalar> apply_pauli(const StateVector<Scalar> &psi, VertexSet x_part, VertexSet z_part) {
    StateVector<Scalar> out(psi.size());
    for (Eigen::Index i = 0; i < psi.size(); i++) {
        VertexSet basis(static_cast<uint64_t>(i));
        std::complex<Scalar> v = psi[i];
        if ((basis & z_part).parity()) {
            v = -v;
        }
        out[static_cast<Eigen::Index>((basis ^ x_part).bits())] = v;
    }
    return out;
}

/// Born probabilities of every outcome when qubit i is measured in the X
/// basis if x_i = 1 and in the Z basis otherwise. Outcome bit 0 is the +1
/// eigenspace of the measured Pauli.
template <typename Scalar = double>
ProbabilityVector<Scalar> statevector_distribution(const Graph &g, Question x) {
    StateVector<Scalar> psi = graph_state<Scalar>(g);
    for (int i : x) {
        apply_hadamard(psi, i);
    }
    return psi.cwiseAbs2();
}

}  // namespace graphgame

#endif
