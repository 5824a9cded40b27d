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
#include <map>
#include <vector>

#include "spto/errors.hpp"

namespace spto {

/// One bounded-fan-in gate: out := table[ins as little-endian bits].
struct Gate {
    int out = 0;
    std::vector<int> ins;
    std::vector<uint8_t> table;  // size 2^|ins|
};

/// Layered Boolean circuit over a global wire space. Wires not written by a
/// gate in a layer carry their value forward. Input wires are the wires never
/// written by any gate; by convention the first N*N of them are the grid
/// vertices (row-major), the rest ancilla (0) or random wires.
struct BooleanCircuit {
    int fan_in_limit = 2;  // K
    int n_wires = 0;
    std::vector<std::vector<Gate>> layers;
    std::map<int, std::array<int, 3>> outputs;  // vertex -> (y0, y1, y2) wires
    std::vector<int> random_wires;

    int depth() const { return static_cast<int>(layers.size()); }
    void validate() const;  // fan-in bound, wire ranges, table sizes, unique outs per layer

    bool is_input_wire(int w) const;
    std::vector<int> output_wires_sorted() const;
};

/// Evaluate with the given input-wire assignment (values of non-input wires
/// are ignored and recomputed). Missing bits default is not allowed: the
/// assignment must cover n_wires entries.
std::vector<uint8_t> evaluate(const BooleanCircuit& circuit,
                              const std::vector<uint8_t>& assignment);

/// Forward light cone: designated output wires that syntactically depend on
/// `input_wire` (DAG reachability, carried wires included). Sorted.
std::vector<int> forward_cone(const BooleanCircuit& circuit, int input_wire);

/// Backward light cone: input wires the given output wire depends on. Sorted;
/// size is bounded by K^depth.
std::vector<int> backward_cone(const BooleanCircuit& circuit, int output_wire);

}  // namespace spto
