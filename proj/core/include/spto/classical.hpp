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
#include <cstdint>
#include <optional>
#include <vector>

#include "spto/game.hpp"

namespace spto {

/// Per-corner five-bit answer table: y(0) = (a, b, c), y(1) = (d, b, e).
/// The overlap bit b is shared between row and column.
struct CornerTable {
    uint8_t a = 0, b = 0, c = 0, d = 0, e = 0;

    std::array<uint8_t, 3> answer(uint8_t input) const {
        return input ? std::array<uint8_t, 3>{d, b, e} : std::array<uint8_t, 3>{a, b, c};
    }
    static CornerTable from_bits(unsigned packed);  // bits (a,b,c,d,e) = 0..4
    unsigned to_bits() const;
};

/// Communication-free strategy for the 3-player game.
struct DeterministicStrategy {
    std::array<CornerTable, 3> tables;

    Transcript play(const GameInstance& instance) const;  // n == 3 only
    int wins_over_family(const GameInstance& instance) const;
};

struct DeterministicSearchResult {
    double max_win = 0;                // fraction of the 8 inputs
    int max_wins = 0;                  // numerator
    DeterministicStrategy witness;     // first maximizer in enumeration order
    uint64_t maximizer_count = 0;      // number of strategies achieving the max
    uint64_t evaluations = 0;          // judge calls
};

// Shared randomness cannot help: a mixture's win rate is an affine
// combination of its deterministic components' rates, so the deterministic
// optimum below bounds every local randomized strategy too.

/// Exhaustive search over all 32^3 = 32768 deterministic strategies for the
/// 3-player game, each scored on the 8 corner inputs through check_win.
/// Enumeration order is lexicographic in the packed (player0, player1,
/// player2) bits regardless of `jobs`, so the witness is reproducible.
DeterministicSearchResult best_deterministic_triangle(int jobs = 1);

/// Perfect communication-assisted strategy: one designated interior player
/// per edge outputs c_R = x_alpha + x_gamma, c_B = x_alpha + x_beta,
/// c_L = x_beta + x_gamma in slot 2; everything else is zero.
/// Throws ValidationError("edge too short") if any edge has no interior player.
Transcript nonlocal_perfect_strategy(const GameInstance& instance);

/// Restricted affine communication model: corner players use CornerTables;
/// each edge's collective output sums are affine in the two adjacent corners'
/// inputs only (sigma_R(x_a, x_b), sigma_B(x_b, x_g), sigma_L(x_g, x_a)).
struct AffineEdgeStrategy {
    std::array<CornerTable, 3> corners;
    // coeff[edge][slot] = (const, coeff on first adjacent corner, coeff on second)
    // edges in order R, B, L; slots 0, 1, 2
    std::array<std::array<std::array<uint8_t, 3>, 3>, 3> coeff{};

    uint8_t edge_value(int edge, int slot, const std::array<uint8_t, 3>& corner_x) const;
    /// Materialize a transcript on an instance by placing each edge's three
    /// collective sums on the first interior player of that edge.
    Transcript play(const GameInstance& instance) const;
    int wins_over_family(const GameInstance& instance) const;
};

struct AffineSearchResult {
    double max_win = 0;
    int max_wins = 0;
    bool perfect_possible = false;  // whether all 8 inputs are jointly winnable
    AffineEdgeStrategy witness;
};

/// Exact optimum of the restricted affine model. Every win condition is an
/// affine equation over GF(2) in the 42 strategy bits (15 corner bits + 27
/// edge-sum coefficients), so the best achievable input subset is found by
/// Gaussian-elimination feasibility over subsets, largest first. The witness
/// is extracted from the solved system and re-verified through check_win on
/// the given geometry.
AffineSearchResult best_edge_restricted_affine(int n, std::array<int, 3> corners);

}  // namespace spto
