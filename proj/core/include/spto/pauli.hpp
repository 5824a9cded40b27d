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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "spto/errors.hpp"

namespace spto {

/// Element of {+1, +i, -1, -i} stored as the exponent k in i^k.
class Phase {
  public:
    constexpr Phase() = default;
    constexpr explicit Phase(unsigned k) : k_(static_cast<uint8_t>(k & 3u)) {}

    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase i() { return Phase(1); }
    static constexpr Phase minus_one() { return Phase(2); }
    static constexpr Phase minus_i() { return Phase(3); }

    unsigned exponent() const { return k_; }
    bool is_real() const { return (k_ & 1u) == 0; }
    std::complex<double> value() const {
        static constexpr double re[4] = {1, 0, -1, 0};
        static constexpr double im[4] = {0, 1, 0, -1};
        return {re[k_], im[k_]};
    }
    Phase operator*(Phase o) const { return Phase(k_ + o.k_); }
    Phase conj() const { return Phase(4u - k_); }
    bool operator==(Phase o) const { return k_ == o.k_; }
    bool operator!=(Phase o) const { return k_ != o.k_; }

  private:
    uint8_t k_ = 0;
};

/// Signed Pauli operator on q qubits: i^k * prod_j X^{x_j} Z^{z_j}.
/// The full {+1, +i, -1, -i} phase group is kept because intermediate
/// products such as XZ = -iY carry imaginary phases.
class PauliString {
  public:
    PauliString() = default;  // empty register
    explicit PauliString(std::size_t num_qubits);

    static PauliString identity(std::size_t num_qubits) { return PauliString(num_qubits); }
    /// Parse labels like "XIZ", "-YX", "+iZZ", "-iXY".
    static PauliString from_label(const std::string& label);
    /// Single-site X^x Z^z factor placed at `qubit` (phase +1).
    static PauliString xz_at(std::size_t num_qubits, std::size_t qubit, bool x, bool z);

    std::size_t num_qubits() const { return q_; }
    bool x(std::size_t qubit) const { return get(x_words_, qubit); }
    bool z(std::size_t qubit) const { return get(z_words_, qubit); }
    void set_x(std::size_t qubit, bool v) { set(x_words_, qubit, v); }
    void set_z(std::size_t qubit, bool v) { set(z_words_, qubit, v); }
    Phase phase() const { return phase_; }
    void set_phase(Phase p) { phase_ = p; }

    bool is_identity_bits() const;  // ignores phase
    /// Hermitian iff the phase exponent matches the X.Z overlap parity.
    bool is_hermitian() const;
    /// +1 or -1 (every Pauli squares to a real sign times identity).
    int square_sign() const;
    /// Hermitian inputs are returned unchanged; a non-Hermitian Pauli is
    /// multiplied by the unique +-i factor that lands on the +1-signed
    /// Y-convention representative (phase i^(number of Y sites)).
    PauliString canonical_hermitian() const;

    bool commutes_with(const PauliString& o) const;
    PauliString& operator*=(const PauliString& o);
    friend PauliString operator*(PauliString a, const PauliString& b) { return a *= b; }
    PauliString operator-() const;

    bool operator==(const PauliString& o) const;
    bool same_bits(const PauliString& o) const;  // phase-insensitive comparison

    /// Copy of `block` placed at qubit offset inside a larger register.
    static PauliString embed(std::size_t num_qubits, std::size_t offset,
                             const PauliString& block);

    /// Dense 2^q x 2^q matrix; intended for small q (tests, oracles).
    Eigen::MatrixXcd to_matrix() const;
    std::string str() const;

  private:
    static bool get(const std::vector<uint64_t>& w, std::size_t qubit) {
        return (w[qubit >> 6] >> (qubit & 63u)) & 1u;
    }
    static void set(std::vector<uint64_t>& w, std::size_t qubit, bool v) {
        if (v)
            w[qubit >> 6] |= 1ull << (qubit & 63u);
        else
            w[qubit >> 6] &= ~(1ull << (qubit & 63u));
    }

    std::size_t q_ = 0;
    std::vector<uint64_t> x_words_, z_words_;
    Phase phase_;
};

}  // namespace spto
