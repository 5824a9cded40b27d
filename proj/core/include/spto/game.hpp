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
#include <string>
#include <vector>

#include "spto/errors.hpp"

namespace spto {

/// One round of the multiplayer triangle game: n players on a cycle, three
/// corner players alpha < beta < gamma, and an input bit per player whose
/// support lies on the corners.
struct GameInstance {
    int n = 3;
    std::array<int, 3> corners{0, 1, 2};
    std::vector<uint8_t> x;  // length n, zero off the corners

    /// Build from corner inputs only (all other players get 0).
    static GameInstance with_corner_inputs(int n, std::array<int, 3> corners,
                                           std::array<uint8_t, 3> corner_x);

    std::array<uint8_t, 3> corner_inputs() const;
    void validate() const;  // throws ValidationError
};

/// Per-player three-bit outputs y_j = (y0, y1, y2). By the table convention a
/// player's row (input 0) reads (a, b, c) and column (input 1) reads (d, b, e).
struct Transcript {
    std::vector<std::array<uint8_t, 3>> y;
};

enum class Condition : uint8_t { Parity, I, II, III, IV, V };

std::string condition_name(Condition c);

struct Verdict {
    bool win = false;
    std::vector<Condition> violated;
};

/// Mod-2 sums of one output slot over the three open edge intervals
/// (alpha,beta), (beta,gamma), (gamma,alpha), taken cyclically; returned in
/// the order (R, B, L).
std::array<uint8_t, 3> edge_sums(const GameInstance& instance, const Transcript& transcript,
                                 int slot);

/// Judge one transcript against the relation-problem conditions: global even
/// parity, the slot-1 sum over the cycle, and the input-dependent conditions
/// (II)-(V). Inputs of corner weight 1 or 3 impose only parity and (I).
Verdict check_win(const GameInstance& instance, const Transcript& transcript);

/// The 8 instances sharing (n, corners) with all corner-input patterns, in
/// lexicographic order of (x_alpha, x_beta, x_gamma).
std::vector<GameInstance> input_family(const GameInstance& instance);

}  // namespace spto
