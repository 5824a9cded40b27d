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

#include "spto/game.hpp"

namespace spto {

GameInstance GameInstance::with_corner_inputs(int n, std::array<int, 3> corners,
                                              std::array<uint8_t, 3> corner_x) {
    GameInstance inst;
    inst.n = n;
    inst.corners = corners;
    inst.x.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < 3; ++i) {
        if (corners[i] < 0 || corners[i] >= n) throw ValidationError("corner index out of range");
        inst.x[static_cast<std::size_t>(corners[i])] = corner_x[static_cast<std::size_t>(i)] & 1u;
    }
    inst.validate();
    return inst;
}

std::array<uint8_t, 3> GameInstance::corner_inputs() const {
    return {x[static_cast<std::size_t>(corners[0])], x[static_cast<std::size_t>(corners[1])],
            x[static_cast<std::size_t>(corners[2])]};
}

void GameInstance::validate() const {
    if (n < 3) throw ValidationError("triangle game needs at least 3 players");
    if (!(0 <= corners[0] && corners[0] < corners[1] && corners[1] < corners[2] && corners[2] < n))
        throw ValidationError("corners must satisfy 0 <= alpha < beta < gamma < n");
    if (x.size() != static_cast<std::size_t>(n))
        throw ValidationError("input string length must equal player count");
    for (int v = 0; v < n; ++v) {
        bool corner = v == corners[0] || v == corners[1] || v == corners[2];
        if (!corner && x[static_cast<std::size_t>(v)] != 0)
            throw ValidationError("input support must lie on the corners");
        if (x[static_cast<std::size_t>(v)] > 1) throw ValidationError("inputs must be bits");
    }
}

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::Parity: return "parity";
        case Condition::I: return "I";
        case Condition::II: return "II";
        case Condition::III: return "III";
        case Condition::IV: return "IV";
        case Condition::V: return "V";
    }
    return "?";
}

namespace {

void require_pair(const GameInstance& inst, const Transcript& tr) {
    inst.validate();
    if (tr.y.size() != static_cast<std::size_t>(inst.n))
        throw ValidationError("transcript must have one output triple per player");
}

// Sum of `slot` over the open cyclic interval (from, to).
uint8_t open_interval_sum(const Transcript& tr, int n, int from, int to, int slot) {
    uint8_t s = 0;
    for (int p = (from + 1) % n; p != to; p = (p + 1) % n)
        s ^= tr.y[static_cast<std::size_t>(p)][static_cast<std::size_t>(slot)] & 1u;
    return s;
}

uint8_t cycle_sum(const Transcript& tr, int slot) {
    uint8_t s = 0;
    for (const auto& y : tr.y) s ^= y[static_cast<std::size_t>(slot)] & 1u;
    return s;
}

}  // namespace

std::array<uint8_t, 3> edge_sums(const GameInstance& inst, const Transcript& tr, int slot) {
    require_pair(inst, tr);
    if (slot < 0 || slot > 2) throw ValidationError("slot must be 0, 1 or 2");
    const auto [a, b, g] = inst.corners;
    return {open_interval_sum(tr, inst.n, a, b, slot), open_interval_sum(tr, inst.n, b, g, slot),
            open_interval_sum(tr, inst.n, g, a, slot)};
}

Verdict check_win(const GameInstance& inst, const Transcript& tr) {
    require_pair(inst, tr);
    Verdict v;

    uint8_t parity = 0;
    for (const auto& y : tr.y) parity ^= (y[0] ^ y[1] ^ y[2]) & 1u;
    if (parity) v.violated.push_back(Condition::Parity);

    if (cycle_sum(tr, 1)) v.violated.push_back(Condition::I);

    const auto [al, be, ga] = inst.corners;
    const auto cx = inst.corner_inputs();
    const int weight = cx[0] + cx[1] + cx[2];

    auto y_at = [&](int player, int slot) -> uint8_t {
        return tr.y[static_cast<std::size_t>(player)][static_cast<std::size_t>(slot)] & 1u;
    };

    if (weight == 0) {
        if (cycle_sum(tr, 0) || cycle_sum(tr, 2)) v.violated.push_back(Condition::II);
    } else if (weight == 2) {
        // (III)/(IV)/(V) with the corner LHS picked per the input pattern and
        // the edge corrections summed over the open paths.
        const uint8_t sR0 = open_interval_sum(tr, inst.n, al, be, 0);
        const uint8_t sB0 = open_interval_sum(tr, inst.n, be, ga, 0);
        const uint8_t sL0 = open_interval_sum(tr, inst.n, ga, al, 0);
        if (cx[0] == 1 && cx[1] == 1) {
            uint8_t lhs = y_at(al, 0) ^ y_at(be, 2) ^ y_at(ga, 0);
            uint8_t rhs = 1u ^ open_interval_sum(tr, inst.n, al, be, 2) ^ sB0 ^ sL0;
            if (lhs != rhs) v.violated.push_back(Condition::III);
        } else if (cx[1] == 1 && cx[2] == 1) {
            uint8_t lhs = y_at(al, 0) ^ y_at(be, 0) ^ y_at(ga, 2);
            uint8_t rhs = 1u ^ open_interval_sum(tr, inst.n, be, ga, 2) ^ sR0 ^ sL0;
            if (lhs != rhs) v.violated.push_back(Condition::IV);
        } else {
            uint8_t lhs = y_at(al, 2) ^ y_at(be, 0) ^ y_at(ga, 0);
            uint8_t rhs = 1u ^ open_interval_sum(tr, inst.n, ga, al, 2) ^ sR0 ^ sB0;
            if (lhs != rhs) v.violated.push_back(Condition::V);
        }
    }
    // weight 1 and weight 3 inputs impose only parity and (I)

    v.win = v.violated.empty();
    return v;
}

std::vector<GameInstance> input_family(const GameInstance& inst) {
    inst.validate();
    std::vector<GameInstance> out;
    out.reserve(8);
    for (uint8_t bits = 0; bits < 8; ++bits) {
        out.push_back(GameInstance::with_corner_inputs(
            inst.n, inst.corners,
            {static_cast<uint8_t>((bits >> 2) & 1u), static_cast<uint8_t>((bits >> 1) & 1u),
             static_cast<uint8_t>(bits & 1u)}));
    }
    return out;
}

}  // namespace spto
