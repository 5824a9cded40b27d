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

#include "spto/circuit.hpp"

#include <algorithm>
#include <set>

namespace spto {

void BooleanCircuit::validate() const {
    if (n_wires <= 0) throw ValidationError("circuit needs at least one wire");
    if (fan_in_limit < 1) throw ValidationError("fan-in limit must be >= 1");
    std::vector<uint8_t> written(static_cast<std::size_t>(n_wires), 0);
    for (const auto& layer : layers) {
        std::set<int> outs;
        for (const Gate& g : layer) {
            if (g.out < 0 || g.out >= n_wires) throw ValidationError("gate output wire out of range");
            if (!outs.insert(g.out).second)
                throw ValidationError("two gates write the same wire in one layer");
            if (static_cast<int>(g.ins.size()) > fan_in_limit)
                throw ValidationError("gate exceeds the declared fan-in limit");
            if (g.table.size() != (1ull << g.ins.size()))
                throw ValidationError("gate truth table size must be 2^fan_in");
            for (int in : g.ins)
                if (in < 0 || in >= n_wires) throw ValidationError("gate input wire out of range");
        }
    }
    for (const auto& [vertex, wires] : outputs) {
        (void)vertex;
        for (int w : wires)
            if (w < 0 || w >= n_wires) throw ValidationError("designated output wire out of range");
    }
    for (int w : random_wires)
        if (w < 0 || w >= n_wires) throw ValidationError("random wire out of range");
}

bool BooleanCircuit::is_input_wire(int w) const {
    for (const auto& layer : layers)
        for (const Gate& g : layer)
            if (g.out == w) return false;
    return true;
}

std::vector<int> BooleanCircuit::output_wires_sorted() const {
    std::vector<int> out;
    out.reserve(outputs.size() * 3);
    for (const auto& [vertex, wires] : outputs) {
        (void)vertex;
        for (int w : wires) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<uint8_t> evaluate(const BooleanCircuit& c, const std::vector<uint8_t>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(c.n_wires))
        throw ValidationError("assignment must cover every wire");
    std::vector<uint8_t> vals = assignment;
    for (auto& v : vals) v &= 1u;
    std::vector<uint8_t> next = vals;
    for (const auto& layer : c.layers) {
        for (const Gate& g : layer) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < g.ins.size(); ++i)
                idx |= static_cast<std::size_t>(vals[static_cast<std::size_t>(g.ins[i])]) << i;
            next[static_cast<std::size_t>(g.out)] = g.table[idx] & 1u;
        }
        vals = next;
    }
    return vals;
}

std::vector<int> forward_cone(const BooleanCircuit& c, int input_wire) {
    if (input_wire < 0 || input_wire >= c.n_wires) throw ValidationError("wire out of range");
    std::vector<uint8_t> reach(static_cast<std::size_t>(c.n_wires), 0);
    reach[static_cast<std::size_t>(input_wire)] = 1;
    std::vector<uint8_t> next = reach;
    for (const auto& layer : c.layers) {
        for (const Gate& g : layer) {
            uint8_t r = 0;
            for (int in : g.ins) r |= reach[static_cast<std::size_t>(in)];
            next[static_cast<std::size_t>(g.out)] = r;  // overwriting kills prior reach
        }
        reach = next;
    }
    std::vector<int> cone;
    for (int w : c.output_wires_sorted())
        if (reach[static_cast<std::size_t>(w)]) cone.push_back(w);
    return cone;
}

std::vector<int> backward_cone(const BooleanCircuit& c, int output_wire) {
    if (output_wire < 0 || output_wire >= c.n_wires) throw ValidationError("wire out of range");
    std::set<int> cone{output_wire};
    for (std::size_t li = c.layers.size(); li-- > 0;) {
        std::set<int> prev;
        for (int w : cone) {
            const Gate* writer = nullptr;
            for (const Gate& g : c.layers[li])
                if (g.out == w) {
                    writer = &g;
                    break;
                }
            if (writer)
                prev.insert(writer->ins.begin(), writer->ins.end());
            else
                prev.insert(w);
        }
        cone = std::move(prev);
    }
    return {cone.begin(), cone.end()};
}

}  // namespace spto
