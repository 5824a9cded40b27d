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

#include "spto/classical.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <thread>

namespace spto {

CornerTable CornerTable::from_bits(unsigned packed) {
    CornerTable t;
    t.a = packed & 1u;
    t.b = (packed >> 1) & 1u;
    t.c = (packed >> 2) & 1u;
    t.d = (packed >> 3) & 1u;
    t.e = (packed >> 4) & 1u;
    return t;
}

unsigned CornerTable::to_bits() const {
    return static_cast<unsigned>(a) | static_cast<unsigned>(b) << 1 |
           static_cast<unsigned>(c) << 2 | static_cast<unsigned>(d) << 3 |
           static_cast<unsigned>(e) << 4;
}

Transcript DeterministicStrategy::play(const GameInstance& inst) const {
    if (inst.n != 3) throw ValidationError("deterministic triangle strategies are for n == 3");
    inst.validate();
    Transcript tr;
    tr.y.resize(3);
    const auto cx = inst.corner_inputs();
    for (int j = 0; j < 3; ++j)
        tr.y[static_cast<std::size_t>(j)] =
            tables[static_cast<std::size_t>(j)].answer(cx[static_cast<std::size_t>(j)]);
    return tr;
}

int DeterministicStrategy::wins_over_family(const GameInstance& inst) const {
    int wins = 0;
    for (const GameInstance& member : input_family(inst))
        if (check_win(member, play(member)).win) ++wins;
    return wins;
}

namespace {

struct PartialBest {
    int max_wins = -1;
    uint64_t count = 0;
    unsigned witness = 0;  // packed (s0 | s1<<5 | s2<<10)
    uint64_t evaluations = 0;
};

PartialBest scan_range(unsigned s0_begin, unsigned s0_end) {
    const GameInstance base = GameInstance::with_corner_inputs(3, {0, 1, 2}, {0, 0, 0});
    const std::vector<GameInstance> family = input_family(base);
    PartialBest best;
    DeterministicStrategy strat;
    for (unsigned s0 = s0_begin; s0 < s0_end; ++s0) {
        strat.tables[0] = CornerTable::from_bits(s0);
        for (unsigned s1 = 0; s1 < 32; ++s1) {
            strat.tables[1] = CornerTable::from_bits(s1);
            for (unsigned s2 = 0; s2 < 32; ++s2) {
                strat.tables[2] = CornerTable::from_bits(s2);
                int wins = 0;
                for (const GameInstance& member : family) {
                    if (check_win(member, strat.play(member)).win) ++wins;
                    ++best.evaluations;
                }
                if (wins > best.max_wins) {
                    best.max_wins = wins;
                    best.count = 1;
                    best.witness = s0 | (s1 << 5) | (s2 << 10);
                } else if (wins == best.max_wins) {
                    ++best.count;
                }
            }
        }
    }
    return best;
}

}  // namespace

DeterministicSearchResult best_deterministic_triangle(int jobs) {
    jobs = std::max(1, jobs);
    std::vector<std::pair<unsigned, unsigned>> ranges;
    unsigned chunk = (32 + static_cast<unsigned>(jobs) - 1) / static_cast<unsigned>(jobs);
    for (unsigned b = 0; b < 32; b += chunk) ranges.emplace_back(b, std::min(32u, b + chunk));

    std::vector<PartialBest> parts(ranges.size());
    if (jobs == 1) {
        for (std::size_t i = 0; i < ranges.size(); ++i)
            parts[i] = scan_range(ranges[i].first, ranges[i].second);
    } else {
        std::vector<std::future<PartialBest>> futs;
        futs.reserve(ranges.size());
        for (auto [b, e] : ranges)
            futs.push_back(std::async(std::launch::async, scan_range, b, e));
        for (std::size_t i = 0; i < futs.size(); ++i) parts[i] = futs[i].get();
    }

    // ordered reduction: ranges are in increasing s0 order, so the first
    // maximizer across parts is the global first maximizer
    PartialBest total;
    for (const PartialBest& p : parts) {
        total.evaluations += p.evaluations;
        if (p.max_wins > total.max_wins) {
            total.max_wins = p.max_wins;
            total.count = p.count;
            total.witness = p.witness;
        } else if (p.max_wins == total.max_wins) {
            total.count += p.count;
        }
    }

    DeterministicSearchResult out;
    out.max_wins = total.max_wins;
    out.max_win = total.max_wins / 8.0;
    out.maximizer_count = total.count;
    out.evaluations = total.evaluations;
    out.witness.tables = {CornerTable::from_bits(total.witness & 31u),
                          CornerTable::from_bits((total.witness >> 5) & 31u),
                          CornerTable::from_bits((total.witness >> 10) & 31u)};
    return out;
}

namespace {

std::array<int, 3> first_interior_players(const GameInstance& inst) {
    const auto [al, be, ga] = inst.corners;
    auto interior = [&](int from, int to) {
        int p = (from + 1) % inst.n;
        if (p == to) throw ValidationError("edge too short");
        return p;
    };
    return {interior(al, be), interior(be, ga), interior(ga, al)};
}

}  // namespace

Transcript nonlocal_perfect_strategy(const GameInstance& inst) {
    inst.validate();
    const auto carriers = first_interior_players(inst);
    const auto cx = inst.corner_inputs();
    Transcript tr;
    tr.y.assign(static_cast<std::size_t>(inst.n), {0, 0, 0});
    tr.y[static_cast<std::size_t>(carriers[0])][2] = (cx[0] ^ cx[2]) & 1u;  // c_R = x_a + x_g
    tr.y[static_cast<std::size_t>(carriers[1])][2] = (cx[0] ^ cx[1]) & 1u;  // c_B = x_a + x_b
    tr.y[static_cast<std::size_t>(carriers[2])][2] = (cx[1] ^ cx[2]) & 1u;  // c_L = x_b + x_g
    return tr;
}

uint8_t AffineEdgeStrategy::edge_value(int edge, int slot, const std::array<uint8_t, 3>& cx) const {
    // adjacent corners per edge: R:(alpha,beta), B:(beta,gamma), L:(gamma,alpha)
    static constexpr int adj[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    const auto& c = coeff[static_cast<std::size_t>(edge)][static_cast<std::size_t>(slot)];
    uint8_t v = c[0];
    if (cx[static_cast<std::size_t>(adj[edge][0])]) v ^= c[1];
    if (cx[static_cast<std::size_t>(adj[edge][1])]) v ^= c[2];
    return v & 1u;
}

Transcript AffineEdgeStrategy::play(const GameInstance& inst) const {
    inst.validate();
    const auto carriers = first_interior_players(inst);
    const auto cx = inst.corner_inputs();
    Transcript tr;
    tr.y.assign(static_cast<std::size_t>(inst.n), {0, 0, 0});
    for (int j = 0; j < 3; ++j)
        tr.y[static_cast<std::size_t>(inst.corners[static_cast<std::size_t>(j)])] =
            corners[static_cast<std::size_t>(j)].answer(cx[static_cast<std::size_t>(j)]);
    for (int edge = 0; edge < 3; ++edge)
        for (int slot = 0; slot < 3; ++slot)
            tr.y[static_cast<std::size_t>(carriers[static_cast<std::size_t>(edge)])]
                [static_cast<std::size_t>(slot)] = edge_value(edge, slot, cx);
    return tr;
}

int AffineEdgeStrategy::wins_over_family(const GameInstance& inst) const {
    int wins = 0;
    for (const GameInstance& member : input_family(inst))
        if (check_win(member, play(member)).win) ++wins;
    return wins;
}

namespace {

// GF(2) linear system over the 42 affine-model bits, rows packed as
// (mask << 1) | const in 64-bit words.
//
// variable layout: corner j in {0,1,2}: bits 5j..5j+4 = (a,b,c,d,e);
// edge E in {R,B,L}, slot s in {0,1,2}: bits 15 + 9E + 3s + {0,1,2} = (p,q,r)
constexpr int kNumVars = 42;

int var_corner(int j, int which) { return 5 * j + which; }  // which: a=0,b=1,c=2,d=3,e=4
int var_edge(int edge, int slot, int coef) { return 15 + 9 * edge + 3 * slot + coef; }

uint64_t edge_mask(int edge, int slot, const std::array<uint8_t, 3>& cx) {
    static constexpr int adj[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    uint64_t m = 1ull << var_edge(edge, slot, 0);
    if (cx[static_cast<std::size_t>(adj[edge][0])]) m ^= 1ull << var_edge(edge, slot, 1);
    if (cx[static_cast<std::size_t>(adj[edge][1])]) m ^= 1ull << var_edge(edge, slot, 2);
    return m;
}

std::vector<uint64_t> conditions_for_input(const std::array<uint8_t, 3>& cx) {
    std::vector<uint64_t> eqs;
    auto push = [&](uint64_t mask, uint64_t rhs) { eqs.push_back((mask << 1) | rhs); };

    uint64_t parity = 0;
    for (int j = 0; j < 3; ++j) {
        if (cx[static_cast<std::size_t>(j)]) {
            parity ^= 1ull << var_corner(j, 3);  // d
            parity ^= 1ull << var_corner(j, 1);  // b
            parity ^= 1ull << var_corner(j, 4);  // e
        } else {
            parity ^= 1ull << var_corner(j, 0);
            parity ^= 1ull << var_corner(j, 1);
            parity ^= 1ull << var_corner(j, 2);
        }
    }
    for (int e = 0; e < 3; ++e)
        for (int s = 0; s < 3; ++s) parity ^= edge_mask(e, s, cx);
    push(parity, 0);

    uint64_t bsum = 0;
    for (int j = 0; j < 3; ++j) bsum ^= 1ull << var_corner(j, 1);
    for (int e = 0; e < 3; ++e) bsum ^= edge_mask(e, 1, cx);
    push(bsum, 0);

    const int w = cx[0] + cx[1] + cx[2];
    if (w == 0) {
        for (int slot : {0, 2}) {
            uint64_t m = 0;
            for (int j = 0; j < 3; ++j) m ^= 1ull << var_corner(j, slot == 0 ? 0 : 2);
            for (int e = 0; e < 3; ++e) m ^= edge_mask(e, slot, cx);
            push(m, 0);
        }
    } else if (w == 2) {
        if (cx[0] && cx[1]) {  // (III): d_a + e_b + a_g = 1 + c_R + a_B + a_L
            uint64_t m = (1ull << var_corner(0, 3)) ^ (1ull << var_corner(1, 4)) ^
                         (1ull << var_corner(2, 0));
            m ^= edge_mask(0, 2, cx) ^ edge_mask(1, 0, cx) ^ edge_mask(2, 0, cx);
            push(m, 1);
        } else if (cx[1] && cx[2]) {  // (IV): a_a + d_b + e_g = 1 + c_B + a_L + a_R
            uint64_t m = (1ull << var_corner(0, 0)) ^ (1ull << var_corner(1, 3)) ^
                         (1ull << var_corner(2, 4));
            m ^= edge_mask(1, 2, cx) ^ edge_mask(2, 0, cx) ^ edge_mask(0, 0, cx);
            push(m, 1);
        } else {  // (V): e_a + a_b + d_g = 1 + c_L + a_R + a_B
            uint64_t m = (1ull << var_corner(0, 4)) ^ (1ull << var_corner(1, 0)) ^
                         (1ull << var_corner(2, 3));
            m ^= edge_mask(2, 2, cx) ^ edge_mask(0, 0, cx) ^ edge_mask(1, 0, cx);
            push(m, 1);
        }
    }
    return eqs;
}

struct Gf2System {
    // pivot bit (of the mask part) -> reduced row
    std::array<uint64_t, kNumVars> pivot_rows{};
    std::array<bool, kNumVars> has_pivot{};
    bool consistent = true;

    void add_row(uint64_t row) {
        while (consistent) {
            uint64_t mask = row >> 1;
            if (mask == 0) {
                if (row & 1) consistent = false;
                return;
            }
            int top = 63 - std::countl_zero(mask);
            if (has_pivot[static_cast<std::size_t>(top)]) {
                row ^= pivot_rows[static_cast<std::size_t>(top)];
            } else {
                has_pivot[static_cast<std::size_t>(top)] = true;
                pivot_rows[static_cast<std::size_t>(top)] = row;
                return;
            }
        }
    }

    /// Particular solution with free variables zero; requires consistency.
    uint64_t solve() {
        for (int top = kNumVars - 1; top >= 0; --top) {
            if (!has_pivot[static_cast<std::size_t>(top)]) continue;
            for (int other = 0; other < kNumVars; ++other) {
                if (other == top || !has_pivot[static_cast<std::size_t>(other)]) continue;
                if ((pivot_rows[static_cast<std::size_t>(other)] >> 1) & (1ull << top))
                    pivot_rows[static_cast<std::size_t>(other)] ^=
                        pivot_rows[static_cast<std::size_t>(top)];
            }
        }
        uint64_t x = 0;
        for (int top = 0; top < kNumVars; ++top)
            if (has_pivot[static_cast<std::size_t>(top)] &&
                (pivot_rows[static_cast<std::size_t>(top)] & 1))
                x |= 1ull << top;
        return x;
    }
};

AffineEdgeStrategy strategy_from_bits(uint64_t bits) {
    AffineEdgeStrategy s;
    for (int j = 0; j < 3; ++j) {
        CornerTable t;
        t.a = (bits >> var_corner(j, 0)) & 1u;
        t.b = (bits >> var_corner(j, 1)) & 1u;
        t.c = (bits >> var_corner(j, 2)) & 1u;
        t.d = (bits >> var_corner(j, 3)) & 1u;
        t.e = (bits >> var_corner(j, 4)) & 1u;
        s.corners[static_cast<std::size_t>(j)] = t;
    }
    for (int e = 0; e < 3; ++e)
        for (int sl = 0; sl < 3; ++sl)
            for (int c = 0; c < 3; ++c)
                s.coeff[static_cast<std::size_t>(e)][static_cast<std::size_t>(sl)]
                       [static_cast<std::size_t>(c)] =
                    (bits >> var_edge(e, sl, c)) & 1u;
    return s;
}

}  // namespace

AffineSearchResult best_edge_restricted_affine(int n, std::array<int, 3> corners) {
    GameInstance base = GameInstance::with_corner_inputs(n, corners, {0, 0, 0});
    first_interior_players(base);  // validates that edges can carry the sums

    std::array<std::vector<uint64_t>, 8> eqs_by_input;
    for (unsigned bits = 0; bits < 8; ++bits)
        eqs_by_input[bits] = conditions_for_input({static_cast<uint8_t>((bits >> 2) & 1u),
                                                   static_cast<uint8_t>((bits >> 1) & 1u),
                                                   static_cast<uint8_t>(bits & 1u)});

    AffineSearchResult out;
    for (int k = 8; k >= 1; --k) {
        for (unsigned subset = 0; subset < 256; ++subset) {
            if (std::popcount(subset) != k) continue;
            Gf2System sys;
            for (unsigned bits = 0; bits < 8; ++bits)
                if (subset & (1u << bits))
                    for (uint64_t row : eqs_by_input[bits]) sys.add_row(row);
            if (!sys.consistent) continue;
            out.max_wins = k;
            out.max_win = k / 8.0;
            out.perfect_possible = (k == 8);
            out.witness = strategy_from_bits(sys.solve());
            // cross-check the extracted witness through the judge
            if (out.witness.wins_over_family(base) < k)
                throw std::logic_error("affine witness failed judge verification");
            return out;
        }
    }
    return out;
}

}  // namespace spto
