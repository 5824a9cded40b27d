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

#include "spto/pauli.hpp"

#include <bit>

namespace spto {

namespace {
std::size_t words_for(std::size_t q) { return (q + 63) / 64; }

std::size_t overlap_popcount(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    std::size_t n = 0;
    for (std::size_t w = 0; w < a.size(); ++w) n += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return n;
}
}  // namespace

PauliString::PauliString(std::size_t num_qubits)
    : q_(num_qubits), x_words_(words_for(num_qubits), 0), z_words_(words_for(num_qubits), 0) {}

PauliString PauliString::from_label(const std::string& label) {
    std::size_t pos = 0;
    Phase phase = Phase::one();
    if (pos < label.size() && (label[pos] == '+' || label[pos] == '-')) {
        if (label[pos] == '-') phase = Phase::minus_one();
        ++pos;
    }
    if (pos < label.size() && (label[pos] == 'i' || label[pos] == 'I')) {
        // "i"/"I" directly before Pauli letters is ambiguous with identity; treat
        // 'i' (lowercase) as the imaginary unit, 'I' as identity.
        if (label[pos] == 'i') {
            phase = phase * Phase::i();
            ++pos;
        }
    }
    const std::size_t q = label.size() - pos;
    PauliString p(q);
    p.set_phase(phase);
    for (std::size_t j = 0; j < q; ++j) {
        switch (label[pos + j]) {
            case 'I': break;
            case 'X': p.set_x(j, true); break;
            case 'Z': p.set_z(j, true); break;
            case 'Y':
                // Y = i X Z
                p.set_x(j, true);
                p.set_z(j, true);
                p.set_phase(p.phase() * Phase::i());
                break;
            default: throw ValidationError("invalid Pauli label: " + label);
        }
    }
    return p;
}

PauliString PauliString::xz_at(std::size_t num_qubits, std::size_t qubit, bool x, bool z) {
    PauliString p(num_qubits);
    p.set_x(qubit, x);
    p.set_z(qubit, z);
    return p;
}

bool PauliString::is_identity_bits() const {
    for (std::size_t w = 0; w < x_words_.size(); ++w)
        if (x_words_[w] | z_words_[w]) return false;
    return true;
}

bool PauliString::is_hermitian() const {
    // P^dag = i^{-k} (-1)^{|x & z|} prod X^x Z^z, so Hermitian iff
    // k == |x & z| mod 2.
    return ((phase_.exponent() + overlap_popcount(x_words_, z_words_)) & 1u) == 0;
}

int PauliString::square_sign() const {
    // P^2 = i^{2k} (-1)^{|x & z|} I
    unsigned k2 = (2 * phase_.exponent() + 2 * (overlap_popcount(x_words_, z_words_) & 1u)) & 3u;
    return k2 == 0 ? 1 : -1;
}

bool PauliString::commutes_with(const PauliString& o) const {
    if (q_ != o.q_) throw ValidationError("Pauli strings act on different qubit counts");
    std::size_t anti =
        overlap_popcount(x_words_, o.z_words_) + overlap_popcount(z_words_, o.x_words_);
    return (anti & 1u) == 0;
}

PauliString& PauliString::operator*=(const PauliString& o) {
    if (q_ != o.q_) throw ValidationError("Pauli strings act on different qubit counts");
    // (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2} per site
    std::size_t cross = overlap_popcount(z_words_, o.x_words_);
    phase_ = phase_ * o.phase_ * Phase(2 * (cross & 1u));
    for (std::size_t w = 0; w < x_words_.size(); ++w) {
        x_words_[w] ^= o.x_words_[w];
        z_words_[w] ^= o.z_words_[w];
    }
    return *this;
}

PauliString PauliString::operator-() const {
    PauliString p = *this;
    p.set_phase(p.phase() * Phase::minus_one());
    return p;
}

PauliString PauliString::canonical_hermitian() const {
    if (is_hermitian()) return *this;
    PauliString p = *this;
    p.set_phase(Phase(static_cast<unsigned>(overlap_popcount(x_words_, z_words_) & 3u)));
    return p;
}

bool PauliString::operator==(const PauliString& o) const {
    return phase_ == o.phase_ && same_bits(o);
}

bool PauliString::same_bits(const PauliString& o) const {
    return q_ == o.q_ && x_words_ == o.x_words_ && z_words_ == o.z_words_;
}

PauliString PauliString::embed(std::size_t num_qubits, std::size_t offset,
                               const PauliString& block) {
    if (offset + block.num_qubits() > num_qubits)
        throw ValidationError("embedded Pauli block exceeds register size");
    PauliString p(num_qubits);
    p.set_phase(block.phase());
    for (std::size_t j = 0; j < block.num_qubits(); ++j) {
        p.set_x(offset + j, block.x(j));
        p.set_z(offset + j, block.z(j));
    }
    return p;
}

Eigen::MatrixXcd PauliString::to_matrix() const {
    if (q_ > 14) throw ValidationError("dense Pauli matrix limited to 14 qubits");
    const std::size_t dim = 1ull << q_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    // basis index: qubit 0 most significant
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = col;
        int minus = 0;
        for (std::size_t j = 0; j < q_; ++j) {
            const std::size_t bit = 1ull << (q_ - 1 - j);
            const bool b = col & bit;
            if (z(j) && b) minus ^= 1;   // Z acts before X on a ket
            if (x(j)) row ^= bit;
        }
        std::complex<double> v = phase_.value();
        if (minus) v = -v;
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
    }
    return m;
}

std::string PauliString::str() const {
    static const char* prefix[4] = {"+", "+i", "-", "-i"};
    // report per-site letters in the Y convention
    std::string s;
    unsigned k = phase_.exponent();
    std::string body;
    for (std::size_t j = 0; j < q_; ++j) {
        bool xb = x(j), zb = z(j);
        if (xb && zb) {
            body += 'Y';
            k = (k + 3) & 3u;  // X Z = -i Y, so factor out the i per Y
        } else {
            body += xb ? 'X' : (zb ? 'Z' : 'I');
        }
    }
    s = prefix[k];
    s += body;
    return s;
}

}  // namespace spto
