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
#include <random>
#include <vector>

#include "spto/pauli.hpp"

namespace spto {

/// Pure stabilizer state on q qubits in the standard stabilizer/destabilizer
/// form. Supports preparation of |+>^q, CZ gates, and measurement of
/// arbitrary Hermitian Pauli operators.
class StabilizerTableau {
  public:
    /// |+>^q: stabilizers X_k, destabilizers Z_k.
    static StabilizerTableau plus_state(std::size_t q, uint64_t seed = 0);

    /// Ring cluster state: prod_k CZ_{k,k+1} |+>^q (indices mod q), stabilized
    /// by Z_{k-1} X_k Z_{k+1}. Throws unless q is even and >= 4 (two qubits
    /// per player on the cycle).
    static StabilizerTableau cluster_ring(std::size_t q, uint64_t seed = 0);

    std::size_t num_qubits() const { return q_; }
    const PauliString& stabilizer(std::size_t k) const { return stab_[k]; }
    const PauliString& destabilizer(std::size_t k) const { return destab_[k]; }

    void apply_cz(std::size_t a, std::size_t b);

    /// Measure a Hermitian Pauli. Deterministic +-1 if +-p stabilizes the
    /// state; otherwise a fair coin from the tableau's seeded generator, with
    /// the usual update. Repeated measurement of the same operator repeats
    /// the outcome.
    int measure(const PauliString& p);

    /// +-1 if +-p is in the stabilizer group, 0 if the outcome is
    /// indeterminate; never modifies the state.
    int expectation(const PauliString& p) const;

    void reseed(uint64_t seed) { rng_.seed(seed); }

  private:
    StabilizerTableau(std::size_t q, uint64_t seed);
    int deterministic_sign(const PauliString& p) const;

    std::size_t q_;
    std::vector<PauliString> stab_, destab_;
    std::mt19937_64 rng_;
};

}  // namespace spto
