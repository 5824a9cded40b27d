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

#include "spto/json_io.hpp"

#include <fstream>

namespace spto {

json complex_to_json(const cplx& v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ValidationError("complex values must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ValidationError("matrix must be a non-empty array");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(j[static_cast<std::size_t>(r)].size()) != cols)
            throw ValidationError("matrix rows have inconsistent lengths");
        for (Eigen::Index c = 0; c < cols; ++c)
            m(r, c) = complex_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    return m;
}

json to_json(const GameInstance& inst) {
    return json{{"n", inst.n},
                {"corners", inst.corners},
                {"x", inst.x}};
}

GameInstance game_instance_from_json(const json& j) {
    GameInstance inst;
    try {
        inst.n = j.at("n").get<int>();
        const auto corners = j.at("corners");
        if (corners.size() != 3) throw ValidationError("corners must have three entries");
        for (int i = 0; i < 3; ++i)
            inst.corners[static_cast<std::size_t>(i)] = corners[static_cast<std::size_t>(i)].get<int>();
        inst.x = j.at("x").get<std::vector<uint8_t>>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed instance JSON: ") + e.what());
    }
    inst.validate();
    return inst;
}

json to_json(const Transcript& tr) {
    json ys = json::array();
    for (const auto& y : tr.y) ys.push_back(json::array({y[0], y[1], y[2]}));
    return json{{"y", std::move(ys)}};
}

Transcript transcript_from_json(const json& j) {
    Transcript tr;
    try {
        for (const auto& row : j.at("y")) {
            if (row.size() != 3) throw ValidationError("each output must have three bits");
            tr.y.push_back({row[0].get<uint8_t>(), row[1].get<uint8_t>(), row[2].get<uint8_t>()});
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed transcript JSON: ") + e.what());
    }
    return tr;
}

json to_json(const CocycleTable& table) {
    const std::size_t n = table.size();
    json rows = json::array();
    for (std::size_t g = 0; g < n; ++g) {
        json row = json::array();
        for (std::size_t h = 0; h < n; ++h) row.push_back(complex_to_json(table.omega_by_index(g, h)));
        rows.push_back(std::move(row));
    }
    return json{{"group", table.group().moduli}, {"omega", std::move(rows)}};
}

CocycleTable cocycle_from_json(const json& j) {
    try {
        GroupDescriptor group{j.at("group").get<std::vector<int>>()};
        const std::size_t n = group.order();
        const auto& rows = j.at("omega");
        if (rows.size() != n) throw ValidationError("cocycle table is incomplete");
        std::vector<cplx> omega;
        omega.reserve(n * n);
        for (const auto& row : rows) {
            if (row.size() != n) throw ValidationError("cocycle table is incomplete");
            for (const auto& entry : row) omega.push_back(complex_from_json(entry));
        }
        return CocycleTable(std::move(group), std::move(omega));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed cocycle JSON: ") + e.what());
    }
}

json to_json(const MPSTensor& tensor) {
    json mats = json::array();
    for (const auto& m : tensor.A) mats.push_back(matrix_to_json(m));
    return json{{"d", tensor.d}, {"D", tensor.D}, {"A", std::move(mats)}};
}

MPSTensor mps_tensor_from_json(const json& j) {
    MPSTensor t;
    try {
        t.d = j.at("d").get<int>();
        t.D = j.at("D").get<int>();
        for (const auto& m : j.at("A")) t.A.push_back(matrix_from_json(m));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed MPS tensor JSON: ") + e.what());
    }
    t.validate();
    return t;
}

json to_json(const SymmetryData& sym) {
    json us = json::array(), vs = json::array();
    for (const auto& m : sym.u) us.push_back(matrix_to_json(m));
    for (const auto& m : sym.V) vs.push_back(matrix_to_json(m));
    return json{{"group", sym.group.moduli}, {"u", std::move(us)}, {"V", std::move(vs)}};
}

SymmetryData symmetry_from_json(const json& j) {
    try {
        GroupDescriptor group{j.at("group").get<std::vector<int>>()};
        std::vector<Eigen::MatrixXcd> u, V;
        for (const auto& m : j.at("u")) u.push_back(matrix_from_json(m));
        for (const auto& m : j.at("V")) V.push_back(matrix_from_json(m));
        return SymmetryData::make(std::move(group), std::move(u), std::move(V));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed symmetry JSON: ") + e.what());
    }
}

json to_json(const BooleanCircuit& circuit) {
    json layers = json::array();
    for (const auto& layer : circuit.layers) {
        json gates = json::array();
        for (const Gate& g : layer)
            gates.push_back(json{{"out", g.out}, {"ins", g.ins}, {"table", g.table}});
        layers.push_back(std::move(gates));
    }
    json outputs = json::object();
    for (const auto& [vertex, wires] : circuit.outputs)
        outputs[std::to_string(vertex)] = json::array({wires[0], wires[1], wires[2]});
    json j{{"K", circuit.fan_in_limit},
           {"layers", std::move(layers)},
           {"outputs", std::move(outputs)}};
    if (!circuit.random_wires.empty()) j["random"] = circuit.random_wires;
    j["n_wires"] = circuit.n_wires;
    return j;
}

BooleanCircuit circuit_from_json(const json& j) {
    BooleanCircuit c;
    try {
        c.fan_in_limit = j.at("K").get<int>();
        int max_wire = -1;
        for (const auto& layer : j.at("layers")) {
            std::vector<Gate> gates;
            for (const auto& gj : layer) {
                Gate g;
                g.out = gj.at("out").get<int>();
                g.ins = gj.at("ins").get<std::vector<int>>();
                g.table = gj.at("table").get<std::vector<uint8_t>>();
                max_wire = std::max(max_wire, g.out);
                for (int in : g.ins) max_wire = std::max(max_wire, in);
                gates.push_back(std::move(g));
            }
            c.layers.push_back(std::move(gates));
        }
        for (const auto& [key, wires] : j.at("outputs").items()) {
            if (wires.size() != 3) throw ValidationError("output triples must have three wires");
            std::array<int, 3> ws{wires[0].get<int>(), wires[1].get<int>(), wires[2].get<int>()};
            for (int w : ws) max_wire = std::max(max_wire, w);
            c.outputs[std::stoi(key)] = ws;
        }
        if (j.contains("random")) {
            c.random_wires = j.at("random").get<std::vector<int>>();
            for (int w : c.random_wires) max_wire = std::max(max_wire, w);
        }
        c.n_wires = j.contains("n_wires") ? j.at("n_wires").get<int>() : max_wire + 1;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed circuit JSON: ") + e.what());
    }
    c.validate();
    return c;
}

json to_json(const GridInstance& inst) {
    return json{{"N", inst.N},
                {"corners", inst.corners},
                {"cycle", inst.cycle},
                {"x", inst.x}};
}

GridInstance grid_instance_from_json(const json& j) {
    GridInstance inst;
    try {
        inst.N = j.at("N").get<int>();
        const auto& corners = j.at("corners");
        for (int i = 0; i < 3; ++i)
            inst.corners[static_cast<std::size_t>(i)] = corners[static_cast<std::size_t>(i)].get<int>();
        inst.cycle = j.at("cycle").get<std::vector<int>>();
        const auto& x = j.at("x");
        for (int i = 0; i < 3; ++i)
            inst.x[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)].get<uint8_t>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed grid instance JSON: ") + e.what());
    }
    inst.validate();
    return inst;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("cannot parse JSON file " + path + ": " + e.what());
    }
}

}  // namespace spto
