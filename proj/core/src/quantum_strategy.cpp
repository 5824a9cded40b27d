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

#include "spto/quantum_strategy.hpp"

namespace spto {

namespace {

// Two-qubit X^a Z^b (x) X^c Z^d with phase +1.
PauliString two_qubit(bool x0, bool z0, bool x1, bool z1) {
    PauliString p(2);
    p.set_x(0, x0);
    p.set_z(0, z0);
    p.set_x(1, x1);
    p.set_z(1, z1);
    return p;
}

}  // namespace

BlockOperators BlockOperators::cluster() {
    BlockOperators ops;
    for (unsigned idx = 0; idx < 4; ++idx) {
        const bool a = (idx >> 1) & 1u, b = idx & 1u;
        ops.u[idx] = two_qubit(a, false, b, false);  // X^a (x) X^b
        // V^R = Z^b X^a (x) Z^a ; site factor Z^b X^a = (-1)^{ab} X^a Z^b
        ops.VR[idx] = two_qubit(a, b, false, a);
        if (a && b) ops.VR[idx].set_phase(Phase::minus_one());
        // V^L = Z^b (x) Z^a X^b ; second factor Z^a X^b = (-1)^{ab} X^b Z^a
        ops.VL[idx] = two_qubit(false, b, b, a);
        if (a && b) ops.VL[idx].set_phase(Phase::minus_one());
    }
    return ops;
}

ContextPair build_contexts(const BlockOperators& ops, const GroupElement& g,
                           const GroupElement& h) {
    if (g.group() != GroupDescriptor::z2xz2() || h.group() != GroupDescriptor::z2xz2())
        throw ValidationError("contexts are defined for Z2xZ2 block operators");
    const std::size_t gi = g.index(), hi = h.index();
    const std::size_t ghi = multiply(g, h).index();

    // raw products like u(h) V^L(g) can carry a -i (e.g. XZ (x) X); the
    // measured observable is the Hermitian Y-convention representative
    ContextPair ctx{
        MeasurementContext{{ops.u[hi].canonical_hermitian(), ops.u[gi].canonical_hermitian(),
                            ops.u[ghi].canonical_hermitian()}},
        MeasurementContext{{(ops.u[hi] * ops.VL[gi]).canonical_hermitian(),
                            ops.u[gi].canonical_hermitian(),
                            (ops.VR[gi] * ops.u[hi]).canonical_hermitian()}},
    };

    for (const MeasurementContext& c : {ctx.row, ctx.column}) {
        for (int i = 0; i < 3; ++i) {
            if (!c.ops[static_cast<std::size_t>(i)].is_hermitian())
                throw ValidationError("contexts undefined: non-Hermitian observable");
            for (int j = i + 1; j < 3; ++j)
                if (!c.ops[static_cast<std::size_t>(i)].commutes_with(
                        c.ops[static_cast<std::size_t>(j)]))
                    throw ValidationError("contexts undefined: observables do not commute");
        }
        PauliString prod = c.ops[0] * c.ops[1] * c.ops[2];
        if (!prod.is_identity_bits() || prod.phase() != Phase::one())
            throw ValidationError("contexts undefined: context product is not +identity");
    }
    return ctx;
}

Transcript play_round(const GameInstance& inst, const ContextPair& contexts, uint64_t seed,
                      std::vector<RoundTraceEntry>* trace) {
    inst.validate();
    const std::size_t q = 2 * static_cast<std::size_t>(inst.n);
    StabilizerTableau state = StabilizerTableau::cluster_ring(q, seed);

    Transcript tr;
    tr.y.assign(static_cast<std::size_t>(inst.n), {0, 0, 0});
    for (int j = 0; j < inst.n; ++j) {
        const bool column = inst.x[static_cast<std::size_t>(j)] != 0;
        const MeasurementContext& ctx = column ? contexts.column : contexts.row;
        for (int slot = 0; slot < 3; ++slot) {
            PauliString op = PauliString::embed(q, 2 * static_cast<std::size_t>(j),
                                                ctx.ops[static_cast<std::size_t>(slot)]);
            const int outcome = state.measure(op);
            tr.y[static_cast<std::size_t>(j)][static_cast<std::size_t>(slot)] =
                outcome < 0 ? 1 : 0;
            if (trace) trace->push_back({j, slot, op.str(), outcome});
        }
    }
    return tr;
}

std::array<PauliString, 5> condition_operators(const GameInstance& inst,
                                               const BlockOperators& ops, const GroupElement& g,
                                               const GroupElement& h) {
    inst.validate();
    const std::size_t n = static_cast<std::size_t>(inst.n);
    const std::size_t q = 2 * n;
    const std::size_t gi = g.index(), hi = h.index();

    auto global = [&](std::size_t op_idx) {
        PauliString p = PauliString::identity(q);
        for (std::size_t j = 0; j < n; ++j) p *= PauliString::embed(q, 2 * j, ops.u[op_idx]);
        return p;
    };

    // twisted string between adjacent corners (from, to): u(h) V^L(g) at
    // `from`, V^R(g) u(h) at `to`, u(g) u(h) on the interior arc from->to,
    // u(h) everywhere else.
    auto twisted = [&](int from, int to) {
        PauliString p = PauliString::identity(q);
        for (std::size_t j = 0; j < n; ++j)
            p *= PauliString::embed(q, 2 * j, ops.u[hi]);
        PauliString interior_g = PauliString::identity(q);
        for (int v = (from + 1) % inst.n; v != to; v = (v + 1) % inst.n)
            interior_g *= PauliString::embed(q, 2 * static_cast<std::size_t>(v), ops.u[gi]);
        // T = V^R_to(g) U(h) V^L_from(g) U_(from,to)(g)
        PauliString t = PauliString::embed(q, 2 * static_cast<std::size_t>(to), ops.VR[gi]);
        t *= p;
        t *= PauliString::embed(q, 2 * static_cast<std::size_t>(from), ops.VL[gi]);
        t *= interior_g;
        return t;
    };

    const auto [al, be, ga] = inst.corners;
    return {global(hi), global(gi), twisted(al, be), twisted(be, ga), twisted(ga, al)};
}

}  // namespace spto
