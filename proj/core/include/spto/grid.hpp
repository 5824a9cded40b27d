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

#include <cstdint>
#include <optional>

#include "spto/circuit.hpp"
#include "spto/game.hpp"

namespace spto {

/// Triangle-game instance embedded in the N x N grid: three corner vertices
/// joined by a simple cycle (vertex ids row-major).
struct GridInstance {
    int N = 0;
    std::array<int, 3> corners{};    // in cycle order starting at cycle[0]
    std::vector<int> cycle;          // simple cycle; cycle[0] == corners[0]
    std::array<uint8_t, 3> x{};      // corner inputs

    void validate() const;
    std::array<int, 3> corner_positions() const;  // positions in `cycle`
    GameInstance to_game_instance() const;
};

/// Row-major tiling by boxes of side ceil(N^(2/3)); trailing boxes may be
/// smaller.
struct NeighborhoodPartition {
    int N = 0;
    int box_side = 0;
    int boxes_per_row = 0;

    int box_count() const { return boxes_per_row * boxes_per_row; }
    int box_of(int vertex) const;
    std::vector<int> vertices_in_box(int box) const;
};

NeighborhoodPartition partition_neighborhoods(int N);

struct HardInstanceConfig {
    int N = 8;
    uint64_t budget = 1000;   // max emitted instances (0 -> empty stream)
    uint64_t seed = 0;        // reserved for sampling order; enumeration is deterministic
    int corner_stride = 0;    // every stride-th vertex inside a box; 0 -> box side
    int path_choices = 1;     // routing variants tried per corner triple
    bool all_inputs = true;   // emit all 8 corner-input strings per geometry
};

struct HardInstanceStats {
    uint64_t emitted = 0;
    uint64_t geometries = 0;
    uint64_t skipped_triples = 0;  // no simple-cycle routing found
};

/// Hard-instance family per the box recipe: corners from three distinct
/// neighborhoods, joined by staircase paths into a simple cycle, times the 8
/// corner-input strings. Deterministic enumeration order.
std::vector<GridInstance> generate_hard_instances(const HardInstanceConfig& config,
                                                  HardInstanceStats* stats = nullptr);

/// Number of corner triples drawn from distinct boxes under `stride`; the
/// stream size is this times path choices times 8 when no triple is skipped.
uint64_t hard_instance_triple_count(int N, int corner_stride);

struct FailureCheck {
    bool holds = false;                 // all conditions met
    bool cones_disjoint = false;        // condition (I)
    std::array<bool, 3> edges_clear{};  // condition (II) per corner
};

/// Light-cone failure conditions for a circuit on this instance: pairwise
/// disjoint corner cones, and each corner's cone disjoint from the outputs on
/// the opposite edge path (endpoints included).
FailureCheck check_failure(const BooleanCircuit& circuit, const GridInstance& instance);

struct SeparationWitness {
    GridInstance instance;
    std::array<uint8_t, 3> losing_x{};
    Transcript transcript;      // circuit outputs on the cycle for losing_x
    Verdict verdict;            // the confirmed loss
    uint64_t instances_checked = 0;
};

struct ConeStats {
    int max_backward_cone = 0;
    int bound = 0;              // K^depth
    bool within_bound = true;
};

ConeStats cone_statistics(const BooleanCircuit& circuit);

/// Scan the stream for the first instance whose failure conditions hold, then
/// evaluate the circuit on that geometry's 8 inputs and return the first
/// losing one. Random wires are fixed from `seed`.
std::optional<SeparationWitness> find_failing_instance(const BooleanCircuit& circuit,
                                                       const std::vector<GridInstance>& stream,
                                                       uint64_t seed = 0);

/// Run the circuit on one instance: x bits on the corner vertices, zero
/// elsewhere, random wires seeded; outputs collected around the cycle.
Transcript run_circuit_on_instance(const BooleanCircuit& circuit, const GridInstance& instance,
                                   uint64_t seed = 0);

// ---- circuit builders ----------------------------------------------------

/// Geometrically local depth-2, fan-in-2 circuit on the N x N grid:
/// y0 = x_v XOR x_right(v), y1 = 0, y2 = x_v AND x_down(v).
BooleanCircuit make_local_shallow_circuit(int N);

/// The perfect nonlocal strategy wired for one instance: single fan-in-2
/// gates computing c_R = x_a XOR x_g, c_B = x_a XOR x_b, c_L = x_b XOR x_g
/// onto a designated interior vertex of each edge.
BooleanCircuit make_perfect_nonlocal_circuit(const GridInstance& instance);

/// Random layered circuit over the grid's 3 N^2 output wires with fan-in K,
/// depth D; each wire's fan-out is capped to keep forward cones small.
BooleanCircuit make_random_layered_circuit(int N, int K, int D, uint64_t seed,
                                           int fanout_cap = 4);

/// Full K-ary tree of depth D feeding one output (the tight case for the
/// backward-cone bound K^D).
BooleanCircuit make_tree_circuit(int K, int D);

}  // namespace spto
