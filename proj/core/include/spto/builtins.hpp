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

#include <optional>
#include <string>

#include "spto/string_order.hpp"

namespace spto {

/// A built-in chain with verified symmetry data and fixed-point boundary
/// operators ready for string-order assemblies.
struct BuiltinState {
    std::string name;
    MPSTensor tensor;                         // the chain tensor
    SymmetryData sym;                         // on-site/virtual reps of Z2xZ2
    BoundaryOperatorPair bounds;              // fixed-point boundary operators
    std::optional<Eigen::MatrixXcd> isometry; // AKLT: Pi (4 x 9), two spins -> two qubits
    std::optional<MPSTensor> fixed_tensor;    // AKLT: two-site fixed-point tensor (d = 9)
    std::optional<SymmetryData> fixed_sym;    // symmetry data of fixed_tensor
};

/// "aklt": the spin-1 chain A = (1/sqrt3) sum_mu sigma_mu (x) |mu> in the
/// Cartesian basis, with u(mu) = exp(i pi S^mu), V(mu) = sigma_mu, the
/// two-site fixed-point tensor, the isometry Pi to the cluster state, and
/// the SM-form boundary operators (support 2).
///
/// "cluster_fixed_point": the two-qubit-per-site cluster tensor Pi applied
/// to the AKLT fixed point, with u((a,b)) = X^a (x) X^b, V((a,b)) = X^a Z^b,
/// and the boundary operators V^R = Z^b X^a (x) Z^a, V^L = Z^b (x) Z^a X^b
/// (support 1).
BuiltinState builtin_state(const std::string& name);

/// Group element labels used by the CLI: e=(0,0), z=(0,1), x=(1,0), y=(1,1).
GroupElement z2xz2_element(const std::string& label);
std::string z2xz2_label(const GroupElement& g);

/// Spin-1 operators S^x, S^y, S^z expressed in the Cartesian basis
/// {|x>, |y>, |z>} (S^mu |mu> = 0).
std::array<Eigen::MatrixXcd, 3> spin1_cartesian();

/// The AKLT boundary operators in spin-observable form,
///   (1/sqrt24){(S^2-4)/2, S_1^mu - S_2^mu} +- (1/2){S^2(6-S^2)/8, S_1^mu + S_2^mu}
/// ('+' gives V^L, '-' gives V^R); mu indexes {x, y, z} = 0, 1, 2.
Eigen::MatrixXcd aklt_spin_form_boundary(int mu, bool left);

/// Two-spin-1 singlet |e~> and Cartesian triplet |mu~> as 9-vectors.
Eigen::VectorXcd aklt_singlet();
Eigen::VectorXcd aklt_triplet(int mu);

/// Ring cluster state amplitudes on q qubits (qubit 0 most significant),
/// normalized; the dense reference for overlap checks.
Eigen::VectorXcd cluster_ring_dense(int q);

}  // namespace spto
