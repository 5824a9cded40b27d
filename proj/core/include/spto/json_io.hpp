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

#include <nlohmann/json.hpp>

#include "spto/circuit.hpp"
#include "spto/game.hpp"
#include "spto/grid.hpp"
#include "spto/group.hpp"
#include "spto/mps.hpp"
#include "spto/string_order.hpp"

namespace spto {

using json = nlohmann::ordered_json;

// instance:   {"n":..., "corners":[a,b,g], "x":[bits]}
json to_json(const GameInstance& inst);
GameInstance game_instance_from_json(const json& j);

// transcript: {"y":[[b,b,b],...]}
json to_json(const Transcript& tr);
Transcript transcript_from_json(const json& j);

// cocycle:    {"group":[2,2], "omega":[[[re,im],...],...]} row-major over (g,h)
json to_json(const CocycleTable& table);
CocycleTable cocycle_from_json(const json& j);

// MPS tensor: {"d":..., "D":..., "A":[[[[re,im],...],...],...]}
json to_json(const MPSTensor& tensor);
MPSTensor mps_tensor_from_json(const json& j);

// symmetry:   {"group":[...], "u":[matrix,...], "V":[matrix,...]}
json to_json(const SymmetryData& sym);
SymmetryData symmetry_from_json(const json& j);

// circuit:    {"K":..., "layers":[[{"out":w,"ins":[w...],"table":[bits]},...],...],
//              "outputs":{"vertex":[w0,w1,w2]}, "random":[w...], "n_wires":...}
// ("random" and "n_wires" optional; n_wires defaults to 1 + max referenced wire)
json to_json(const BooleanCircuit& circuit);
BooleanCircuit circuit_from_json(const json& j);

// grid instance: {"N":..., "corners":[a,b,g], "cycle":[v...], "x":[xa,xb,xg]}
json to_json(const GridInstance& inst);
GridInstance grid_instance_from_json(const json& j);

json complex_to_json(const cplx& v);
cplx complex_from_json(const json& j);
json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const json& j);

json load_json_file(const std::string& path);  // throws ValidationError

}  // namespace spto
