// Copyright 2026 The spto-games Authors
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

#pragma once

#include <array>
#include <optional>

#include "spto/game.hpp"
#include "spto/group.hpp"
#include "spto/pauli.hpp"
#include "spto/tableau.hpp"

namespace spto {

/// On-site symmetry and boundary operators of one player block (m = 2 qubits
/// for the cluster chain), indexed by the Z2xZ2 element in lexicographic
/// order.
struct BlockOperators {
    std::array<PauliString, 4> u;
    std::array<PauliString, 4> VL;
    std::array<PauliString, 4> VR;

    /// The 1D cluster operators: u((a,b)) = X^a (x) X^b,
    /// V^R((a,b)) = Z^b X^a (x) Z^a, V^L((a,b)) = Z^b (x) Z^a X^b.
    static BlockOperators cluster();
};

/// Per-player measurement context: three commuting two-qubit observables in
/// output-slot order. Row is measured on input 0, column on input 1.
struct MeasurementContext {
    std::array<PauliString, 3> ops;  // slots 0, 1, 2
};

struct ContextPair {
    MeasurementContext row;     // [a: u(h), b: u(g), c: u(gh)]
    MeasurementContext column;  // [d: u(h) V^L(g), b: u(g), e: V^R(g) u(h)]
};

/// Assemble both contexts for elements (g, h). Requires every pair inside a
/// context to commute (guaranteed when the twist Omega(g,h) = -1) and each
/// ordered context product to be the identity with phase +1; throws
/// ValidationError("contexts undefined") otherwise.
ContextPair build_contexts(const BlockOperators& ops, const GroupElement& g,
                           const GroupElement& h);

/// One measured observable of a round, for the optional trace log.
struct RoundTraceEntry {
    int player = 0;
    int slot = 0;
    std::string op;  // the embedded operator, Y-convention label
    int outcome = 0;
};

/// One full round of the quantum strategy: prepare the 2n-qubit ring cluster
/// state, let player j measure its context on qubits (2j, 2j+1) -- corners
/// with input 1 measure the column, everyone else the row -- and map each
/// outcome to a bit via bit = (1 - outcome) / 2. Outcomes are resolved in
/// ascending qubit order for reproducibility. When `trace` is given, every
/// (operator, outcome) pair is appended to it.
Transcript play_round(const GameInstance& instance, const ContextPair& contexts, uint64_t seed,
                      std::vector<RoundTraceEntry>* trace = nullptr);

/// The five global operators whose stabilizer signs certify the win
/// conditions on the ring cluster state: U(h), U(g) (signs +1) and the three
/// twisted strings T_{[alpha,beta]}, T_{[beta,gamma]}, T_{[gamma,alpha]}
/// (signs -1).
std::array<PauliString, 5> condition_operators(const GameInstance& instance,
                                               const BlockOperators& ops, const GroupElement& g,
                                               const GroupElement& h);

}  // namespace spto
