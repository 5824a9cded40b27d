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

#include "spto/grid.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <unordered_set>

namespace spto {

void GridInstance::validate() const {
    if (N < 2) throw ValidationError("grid side must be >= 2");
    if (cycle.size() < 3) throw ValidationError("cycle must contain at least 3 vertices");
    std::unordered_set<int> seen;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int v = cycle[i];
        if (v < 0 || v >= N * N) throw ValidationError("cycle vertex out of range");
        if (!seen.insert(v).second) throw ValidationError("cycle is not simple");
        const int w = cycle[(i + 1) % cycle.size()];
        const int dr = std::abs(v / N - w / N), dc = std::abs(v % N - w % N);
        if (dr + dc != 1) throw ValidationError("cycle steps must be grid edges");
    }
    if (cycle[0] != corners[0]) throw ValidationError("cycle must start at the first corner");
    const auto pos = corner_positions();
    if (!(pos[0] == 0 && pos[0] < pos[1] && pos[1] < pos[2]))
        throw ValidationError("corners must appear in cycle order");
}

std::array<int, 3> GridInstance::corner_positions() const {
    std::array<int, 3> pos{-1, -1, -1};
    for (std::size_t i = 0; i < cycle.size(); ++i)
        for (int c = 0; c < 3; ++c)
            if (cycle[i] == corners[static_cast<std::size_t>(c)])
                pos[static_cast<std::size_t>(c)] = static_cast<int>(i);
    for (int c = 0; c < 3; ++c)
        if (pos[static_cast<std::size_t>(c)] < 0)
            throw ValidationError("corner is not on the cycle");
    return pos;
}

GameInstance GridInstance::to_game_instance() const {
    const auto pos = corner_positions();
    return GameInstance::with_corner_inputs(static_cast<int>(cycle.size()), pos, x);
}

int NeighborhoodPartition::box_of(int vertex) const {
    const int r = vertex / N, c = vertex % N;
    return (r / box_side) * boxes_per_row + (c / box_side);
}

std::vector<int> NeighborhoodPartition::vertices_in_box(int box) const {
    const int br = box / boxes_per_row, bc = box % boxes_per_row;
    std::vector<int> verts;
    for (int r = br * box_side; r < std::min(N, (br + 1) * box_side); ++r)
        for (int c = bc * box_side; c < std::min(N, (bc + 1) * box_side); ++c)
            verts.push_back(r * N + c);
    return verts;
}

NeighborhoodPartition partition_neighborhoods(int N) {
    if (N < 8) throw ValidationError("neighborhood partition needs N >= 8");
    // box side = ceil(N^(2/3)): the smallest s with s^3 >= N^2
    int s = 1;
    while (static_cast<long long>(s) * s * s < static_cast<long long>(N) * N) ++s;
    NeighborhoodPartition p;
    p.N = N;
    p.box_side = s;
    p.boxes_per_row = (N + s - 1) / s;
    return p;
}

namespace {

// Staircase path from P to Q: vertical to a bend row, horizontal to Q's
// column, vertical to Q. `transposed` swaps the roles of rows and columns.
std::vector<int> staircase_path(int N, int P, int Q, bool transposed, int bend_offset) {
    auto row = [&](int v) { return transposed ? v % N : v / N; };
    auto col = [&](int v) { return transposed ? v / N : v % N; };
    auto vert = [&](int r, int c) { return transposed ? c * N + r : r * N + c; };
    const int r1 = row(P), c1 = col(P), r2 = row(Q), c2 = col(Q);
    int rb = std::clamp(r2 + bend_offset, 0, N - 1);
    std::vector<int> path;
    for (int r = r1; r != rb; r += (rb > r1 ? 1 : -1)) path.push_back(vert(r, c1));
    for (int c = c1; c != c2; c += (c2 > c1 ? 1 : -1)) path.push_back(vert(rb, c));
    for (int r = rb; r != r2; r += (r2 > rb ? 1 : -1)) path.push_back(vert(r, c2));
    path.push_back(Q);
    return path;  // from P (inclusive) to Q (inclusive)
}

std::optional<std::vector<int>> route_triangle(int N, int A, int B, int C, int bend_offset) {
    for (unsigned combo = 0; combo < 8; ++combo) {
        const std::vector<int> pab = staircase_path(N, A, B, combo & 1u, bend_offset);
        const std::vector<int> pbc = staircase_path(N, B, C, combo & 2u, bend_offset);
        const std::vector<int> pca = staircase_path(N, C, A, combo & 4u, bend_offset);
        std::vector<int> cycle;
        cycle.insert(cycle.end(), pab.begin(), pab.end() - 1);
        cycle.insert(cycle.end(), pbc.begin(), pbc.end() - 1);
        cycle.insert(cycle.end(), pca.begin(), pca.end() - 1);
        if (cycle.size() < 3) continue;
        std::unordered_set<int> seen(cycle.begin(), cycle.end());
        if (seen.size() == cycle.size()) return cycle;
    }
    return std::nullopt;
}

}  // namespace

uint64_t hard_instance_triple_count(int N, int corner_stride) {
    const NeighborhoodPartition part = partition_neighborhoods(N);
    const int nb = part.box_count();
    const std::size_t stride = static_cast<std::size_t>(
        corner_stride > 0 ? corner_stride : part.box_side);
    std::vector<uint64_t> per_box(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b) {
        const auto verts = part.vertices_in_box(b);
        per_box[static_cast<std::size_t>(b)] = (verts.size() + stride - 1) / stride;
    }
    uint64_t total = 0;
    for (int b1 = 0; b1 < nb; ++b1)
        for (int b2 = b1 + 1; b2 < nb; ++b2)
            for (int b3 = b2 + 1; b3 < nb; ++b3)
                total += per_box[static_cast<std::size_t>(b1)] *
                         per_box[static_cast<std::size_t>(b2)] *
                         per_box[static_cast<std::size_t>(b3)];
    return total;
}

std::vector<GridInstance> generate_hard_instances(const HardInstanceConfig& config,
                                                  HardInstanceStats* stats) {
    const NeighborhoodPartition part = partition_neighborhoods(config.N);
    HardInstanceStats local;
    std::vector<GridInstance> out;
    if (config.budget == 0) {
        if (stats) *stats = local;
        return out;
    }
    const int stride = config.corner_stride > 0 ? config.corner_stride : part.box_side;
    const int nb = part.box_count();
    std::vector<std::vector<int>> strided(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b) {
        const auto verts = part.vertices_in_box(b);
        for (std::size_t i = 0; i < verts.size(); i += static_cast<std::size_t>(stride))
            strided[static_cast<std::size_t>(b)].push_back(verts[i]);
    }

    for (int b1 = 0; b1 < nb && out.size() < config.budget; ++b1)
        for (int b2 = b1 + 1; b2 < nb && out.size() < config.budget; ++b2)
            for (int b3 = b2 + 1; b3 < nb && out.size() < config.budget; ++b3)
                for (int v1 : strided[static_cast<std::size_t>(b1)])
                    for (int v2 : strided[static_cast<std::size_t>(b2)])
                        for (int v3 : strided[static_cast<std::size_t>(b3)]) {
                            if (out.size() >= config.budget) goto done;
                            for (int variant = 0; variant < config.path_choices; ++variant) {
                                auto cycle = route_triangle(config.N, v1, v2, v3, variant);
                                if (!cycle) {
                                    ++local.skipped_triples;
                                    continue;
                                }
                                ++local.geometries;
                                const unsigned patterns = config.all_inputs ? 8 : 1;
                                for (unsigned bits = 0; bits < patterns; ++bits) {
                                    GridInstance inst;
                                    inst.N = config.N;
                                    inst.corners = {v1, v2, v3};
                                    inst.cycle = *cycle;
                                    inst.x = {static_cast<uint8_t>((bits >> 2) & 1u),
                                              static_cast<uint8_t>((bits >> 1) & 1u),
                                              static_cast<uint8_t>(bits & 1u)};
                                    out.push_back(std::move(inst));
                                    ++local.emitted;
                                    if (out.size() >= config.budget) break;
                                }
                            }
                        }
done:
    if (stats) *stats = local;
    return out;
}

namespace {

std::vector<int> cone_of_corner(const BooleanCircuit& circ, int vertex) {
    return forward_cone(circ, vertex);
}

bool intersects(const std::vector<int>& sorted_a, const std::vector<int>& sorted_b) {
    std::size_t i = 0, j = 0;
    while (i < sorted_a.size() && j < sorted_b.size()) {
        if (sorted_a[i] == sorted_b[j]) return true;
        if (sorted_a[i] < sorted_b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

// Output wires of the vertices on the closed path between two cycle positions
// (endpoints included).
std::vector<int> path_output_wires(const BooleanCircuit& circ, const GridInstance& inst,
                                   int from_pos, int to_pos) {
    std::vector<int> wires;
    const int n = static_cast<int>(inst.cycle.size());
    for (int p = from_pos;; p = (p + 1) % n) {
        auto it = circ.outputs.find(inst.cycle[static_cast<std::size_t>(p)]);
        if (it != circ.outputs.end())
            for (int w : it->second) wires.push_back(w);
        if (p == to_pos) break;
    }
    std::sort(wires.begin(), wires.end());
    wires.erase(std::unique(wires.begin(), wires.end()), wires.end());
    return wires;
}

}  // namespace

FailureCheck check_failure(const BooleanCircuit& circ, const GridInstance& inst) {
    inst.validate();
    circ.validate();
    const auto pos = inst.corner_positions();
    std::array<std::vector<int>, 3> cones;
    for (int c = 0; c < 3; ++c)
        cones[static_cast<std::size_t>(c)] =
            cone_of_corner(circ, inst.corners[static_cast<std::size_t>(c)]);

    FailureCheck out;
    out.cones_disjoint = !intersects(cones[0], cones[1]) && !intersects(cones[0], cones[2]) &&
                         !intersects(cones[1], cones[2]);
    // opposite edges: alpha vs (beta..gamma), beta vs (gamma..alpha),
    // gamma vs (alpha..beta)
    out.edges_clear[0] = !intersects(cones[0], path_output_wires(circ, inst, pos[1], pos[2]));
    out.edges_clear[1] = !intersects(cones[1], path_output_wires(circ, inst, pos[2], pos[0]));
    out.edges_clear[2] = !intersects(cones[2], path_output_wires(circ, inst, pos[0], pos[1]));
    out.holds = out.cones_disjoint && out.edges_clear[0] && out.edges_clear[1] &&
                out.edges_clear[2];
    return out;
}

Transcript run_circuit_on_instance(const BooleanCircuit& circ, const GridInstance& inst,
                                   uint64_t seed) {
    circ.validate();
    inst.validate();
    std::vector<uint8_t> assignment(static_cast<std::size_t>(circ.n_wires), 0);
    for (int c = 0; c < 3; ++c)
        assignment[static_cast<std::size_t>(inst.corners[static_cast<std::size_t>(c)])] =
            inst.x[static_cast<std::size_t>(c)];
    std::mt19937_64 rng(seed);
    for (int w : circ.random_wires) assignment[static_cast<std::size_t>(w)] = rng() & 1u;
    const std::vector<uint8_t> vals = evaluate(circ, assignment);

    Transcript tr;
    tr.y.reserve(inst.cycle.size());
    for (int v : inst.cycle) {
        auto it = circ.outputs.find(v);
        if (it == circ.outputs.end()) {
            tr.y.push_back({0, 0, 0});
        } else {
            tr.y.push_back({vals[static_cast<std::size_t>(it->second[0])],
                            vals[static_cast<std::size_t>(it->second[1])],
                            vals[static_cast<std::size_t>(it->second[2])]});
        }
    }
    return tr;
}

ConeStats cone_statistics(const BooleanCircuit& circ) {
    circ.validate();
    ConeStats st;
    st.bound = 1;
    for (int d = 0; d < circ.depth(); ++d) st.bound *= circ.fan_in_limit;
    for (int w : circ.output_wires_sorted())
        st.max_backward_cone =
            std::max(st.max_backward_cone, static_cast<int>(backward_cone(circ, w).size()));
    st.within_bound = st.max_backward_cone <= st.bound;
    return st;
}

std::optional<SeparationWitness> find_failing_instance(const BooleanCircuit& circ,
                                                       const std::vector<GridInstance>& stream,
                                                       uint64_t seed) {
    uint64_t checked = 0;
    const GridInstance* last_geometry = nullptr;
    for (const GridInstance& inst : stream) {
        ++checked;
        if (last_geometry && last_geometry->corners == inst.corners &&
            last_geometry->cycle == inst.cycle)
            continue;  // same geometry, different x: already evaluated
        last_geometry = &inst;
        const FailureCheck fc = check_failure(circ, inst);
        if (!fc.holds) continue;
        // failure conditions hold: some input of this geometry must lose
        for (unsigned bits = 0; bits < 8; ++bits) {
            GridInstance probe = inst;
            probe.x = {static_cast<uint8_t>((bits >> 2) & 1u),
                       static_cast<uint8_t>((bits >> 1) & 1u),
                       static_cast<uint8_t>(bits & 1u)};
            const Transcript tr = run_circuit_on_instance(circ, probe, seed);
            const Verdict verdict = check_win(probe.to_game_instance(), tr);
            if (!verdict.win) {
                SeparationWitness w;
                w.instance = probe;
                w.losing_x = probe.x;
                w.transcript = tr;
                w.verdict = verdict;
                w.instances_checked = checked;
                return w;
            }
        }
    }
    return std::nullopt;
}

BooleanCircuit make_local_shallow_circuit(int N) {
    if (N < 2) throw ValidationError("grid side must be >= 2");
    BooleanCircuit c;
    c.fan_in_limit = 2;
    const int nv = N * N;
    // wires: [0, nv) inputs; [nv, 4nv) outputs (3 per vertex); [4nv, 5nv) scratch
    c.n_wires = 5 * nv;
    auto out_wire = [&](int v, int slot) { return nv + 3 * v + slot; };
    auto scratch = [&](int v) { return 4 * nv + v; };
    auto right_of = [&](int v) { return (v % N + 1 < N) ? v + 1 : v - 1; };
    auto down_of = [&](int v) { return (v / N + 1 < N) ? v + N : v - N; };

    std::vector<Gate> layer1, layer2;
    const std::vector<uint8_t> and_table{0, 0, 0, 1};
    const std::vector<uint8_t> xor_table{0, 1, 1, 0};
    const std::vector<uint8_t> or_table{0, 1, 1, 1};
    for (int v = 0; v < nv; ++v) {
        layer1.push_back({scratch(v), {v, down_of(v)}, and_table});
        layer2.push_back({out_wire(v, 0), {v, right_of(v)}, xor_table});
        layer2.push_back({out_wire(v, 2), {scratch(v), v}, or_table});
        c.outputs[v] = {out_wire(v, 0), out_wire(v, 1), out_wire(v, 2)};
        // y1 wires stay unwritten ancilla (constant 0)
    }
    c.layers = {std::move(layer1), std::move(layer2)};
    c.validate();
    return c;
}

BooleanCircuit make_perfect_nonlocal_circuit(const GridInstance& inst) {
    inst.validate();
    const int N = inst.N;
    const int nv = N * N;
    const auto pos = inst.corner_positions();
    const int n = static_cast<int>(inst.cycle.size());
    auto interior = [&](int from_pos, int to_pos) {
        const int p = (from_pos + 1) % n;
        if (p == to_pos) throw ValidationError("edge too short");
        return inst.cycle[static_cast<std::size_t>(p)];
    };
    const int carrier_R = interior(pos[0], pos[1]);
    const int carrier_B = interior(pos[1], pos[2]);
    const int carrier_L = interior(pos[2], pos[0]);

    BooleanCircuit c;
    c.fan_in_limit = 2;
    // wires: inputs [0, nv); zero ancilla nv; gate outputs nv+1..nv+3
    c.n_wires = nv + 4;
    const int zero = nv;
    const std::vector<uint8_t> xor_table{0, 1, 1, 0};
    std::vector<Gate> layer;
    layer.push_back({nv + 1, {inst.corners[0], inst.corners[2]}, xor_table});  // c_R
    layer.push_back({nv + 2, {inst.corners[0], inst.corners[1]}, xor_table});  // c_B
    layer.push_back({nv + 3, {inst.corners[1], inst.corners[2]}, xor_table});  // c_L
    c.layers = {std::move(layer)};
    for (int v : inst.cycle) c.outputs[v] = {zero, zero, zero};
    c.outputs[carrier_R][2] = nv + 1;
    c.outputs[carrier_B][2] = nv + 2;
    c.outputs[carrier_L][2] = nv + 3;
    c.validate();
    return c;
}

BooleanCircuit make_random_layered_circuit(int N, int K, int D, uint64_t seed, int fanout_cap) {
    if (K < 1 || D < 1) throw ValidationError("random circuit needs K >= 1 and D >= 1");
    if (fanout_cap < 1) throw ValidationError("fan-out cap must be >= 1");
    BooleanCircuit c;
    c.fan_in_limit = K;
    const int nv = N * N;
    std::mt19937_64 rng(seed);

    // input pool: the grid wires plus 2 nv zero-valued ancilla wires, so the
    // total fan-out budget covers every layer's K draws without exceeding the
    // per-wire cap (which keeps forward cones small)
    std::vector<int> prev_pool(static_cast<std::size_t>(3 * nv));
    for (int v = 0; v < 3 * nv; ++v) prev_pool[static_cast<std::size_t>(v)] = v;
    int next_wire = 3 * nv;
    const int fallback_ancilla = nv;  // over-budget draws land on an ancilla

    auto draw_ins = [&](std::vector<int>& budget) {
        std::vector<int> ins;
        for (int t = 0; t < K; ++t) {
            int tries = 0;
            int chosen = -1;
            while (tries++ < 64) {
                const std::size_t pick = rng() % prev_pool.size();
                if (budget[pick] > 0) {
                    --budget[pick];
                    chosen = prev_pool[pick];
                    break;
                }
            }
            ins.push_back(chosen >= 0 ? chosen : fallback_ancilla);
        }
        return ins;
    };

    for (int layer = 0; layer < D; ++layer) {
        const int gate_count = 3 * nv;
        std::vector<int> budget(prev_pool.size(), fanout_cap);
        std::vector<Gate> gates;
        std::vector<int> pool;
        for (int gidx = 0; gidx < gate_count; ++gidx) {
            Gate g;
            g.out = next_wire++;
            g.ins = draw_ins(budget);
            g.table.resize(1ull << g.ins.size());
            for (auto& bit : g.table) bit = rng() & 1u;
            pool.push_back(g.out);
            gates.push_back(std::move(g));
        }
        c.layers.push_back(std::move(gates));
        prev_pool = std::move(pool);
    }
    for (int v = 0; v < nv; ++v)
        c.outputs[v] = {prev_pool[static_cast<std::size_t>(3 * v)],
                        prev_pool[static_cast<std::size_t>(3 * v + 1)],
                        prev_pool[static_cast<std::size_t>(3 * v + 2)]};
    c.n_wires = next_wire;
    c.validate();
    return c;
}

BooleanCircuit make_tree_circuit(int K, int D) {
    if (K < 1 || D < 1) throw ValidationError("tree circuit needs K >= 1 and D >= 1");
    BooleanCircuit c;
    c.fan_in_limit = K;
    int leaves = 1;
    for (int d = 0; d < D; ++d) leaves *= K;
    int next_wire = leaves;
    std::vector<int> prev(static_cast<std::size_t>(leaves));
    for (int i = 0; i < leaves; ++i) prev[static_cast<std::size_t>(i)] = i;
    for (int d = 0; d < D; ++d) {
        std::vector<Gate> layer;
        std::vector<int> cur;
        for (std::size_t i = 0; i < prev.size(); i += static_cast<std::size_t>(K)) {
            Gate g;
            g.out = next_wire++;
            for (int t = 0; t < K; ++t) g.ins.push_back(prev[i + static_cast<std::size_t>(t)]);
            g.table.assign(1ull << g.ins.size(), 0);
            // parity gate
            for (std::size_t idx = 0; idx < g.table.size(); ++idx)
                g.table[idx] = static_cast<uint8_t>(std::popcount(idx) & 1u);
            cur.push_back(g.out);
            layer.push_back(std::move(g));
        }
        c.layers.push_back(std::move(layer));
        prev = std::move(cur);
    }
    const int zero = next_wire++;  // ancilla
    c.n_wires = next_wire;
    c.outputs[0] = {prev[0], zero, zero};
    c.validate();
    return c;
}

}  // namespace spto
