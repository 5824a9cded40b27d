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

#include "spto/tableau.hpp"

namespace spto {

StabilizerTableau::StabilizerTableau(std::size_t q, uint64_t seed) : q_(q), rng_(seed) {
    stab_.reserve(q);
    destab_.reserve(q);
}

StabilizerTableau StabilizerTableau::plus_state(std::size_t q, uint64_t seed) {
    StabilizerTableau t(q, seed);
    for (std::size_t k = 0; k < q; ++k) {
        t.stab_.push_back(PauliString::xz_at(q, k, true, false));    // X_k
        t.destab_.push_back(PauliString::xz_at(q, k, false, true));  // Z_k
    }
    return t;
}

StabilizerTableau StabilizerTableau::cluster_ring(std::size_t q, uint64_t seed) {
    if (q < 4 || q % 2 != 0)
        throw ValidationError("cycle requires even qubit count >= 4 (two qubits per player)");
    StabilizerTableau t = plus_state(q, seed);
    for (std::size_t k = 0; k < q; ++k) t.apply_cz(k, (k + 1) % q);
    return t;
}

void StabilizerTableau::apply_cz(std::size_t a, std::size_t b) {
    if (a == b || a >= q_ || b >= q_) throw ValidationError("CZ needs two distinct qubits");
    // CZ (i^k X^{xa}Z^{za} (x) X^{xb}Z^{zb}) CZ
    //   = (-1)^{xa xb} i^k X^{xa}Z^{za^xb} (x) X^{xb}Z^{zb^xa}
    auto update = [&](PauliString& p) {
        const bool xa = p.x(a), xb = p.x(b);
        p.set_z(a, p.z(a) ^ xb);
        p.set_z(b, p.z(b) ^ xa);
        if (xa && xb) p.set_phase(p.phase() * Phase::minus_one());
    };
    for (auto& row : stab_) update(row);
    for (auto& row : destab_) update(row);
}

int StabilizerTableau::deterministic_sign(const PauliString& p) const {
    // +-p is in the stabilizer group; recover the sign by accumulating the
    // stabilizer rows flagged by anticommuting destabilizers.
    PauliString acc = PauliString::identity(q_);
    for (std::size_t k = 0; k < q_; ++k)
        if (!destab_[k].commutes_with(p)) acc *= stab_[k];
    if (!acc.same_bits(p))
        throw std::logic_error("tableau invariant broken: accumulated row mismatch");
    // acc and p are the same Pauli up to a real sign
    const unsigned dk = (acc.phase().exponent() - p.phase().exponent()) & 3u;
    if (dk == 0) return 1;
    if (dk == 2) return -1;
    throw std::logic_error("tableau invariant broken: imaginary relative phase");
}

int StabilizerTableau::expectation(const PauliString& p) const {
    if (p.num_qubits() != q_) throw ValidationError("operator/state qubit count mismatch");
    if (!p.is_hermitian()) throw ValidationError("expectation requires a Hermitian Pauli");
    for (std::size_t k = 0; k < q_; ++k)
        if (!stab_[k].commutes_with(p)) return 0;
    return deterministic_sign(p);
}

int StabilizerTableau::measure(const PauliString& p) {
    if (p.num_qubits() != q_) throw ValidationError("operator/state qubit count mismatch");
    if (!p.is_hermitian()) throw ValidationError("measurement requires a Hermitian Pauli");

    std::size_t pivot = q_;
    for (std::size_t k = 0; k < q_; ++k) {
        if (!stab_[k].commutes_with(p)) {
            pivot = k;
            break;
        }
    }
    if (pivot == q_) return deterministic_sign(p);

    // random outcome branch
    const int outcome = (rng_() & 1u) ? -1 : 1;
    for (std::size_t k = 0; k < q_; ++k) {
        if (k != pivot && !stab_[k].commutes_with(p)) stab_[k] *= stab_[pivot];
        if (!destab_[k].commutes_with(p)) {
            if (k == pivot) continue;  // replaced below
            destab_[k] *= stab_[pivot];
        }
    }
    destab_[pivot] = stab_[pivot];
    stab_[pivot] = outcome < 0 ? -p : p;
    return outcome;
}

}  // namespace spto
