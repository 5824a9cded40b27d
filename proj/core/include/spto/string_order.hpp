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

#include <vector>

#include "spto/group.hpp"
#include "spto/mps.hpp"

namespace spto {

/// On-site rep u(g) (d x d) and virtual rep V(g) (D x D) of a finite abelian
/// symmetry, with the 2-cocycle extracted from the virtual rep's defects.
struct SymmetryData {
    GroupDescriptor group;
    std::vector<Eigen::MatrixXcd> u;  // per element, lexicographic
    std::vector<Eigen::MatrixXcd> V;
    CocycleTable cocycle;

    static SymmetryData make(GroupDescriptor group, std::vector<Eigen::MatrixXcd> u,
                             std::vector<Eigen::MatrixXcd> V);

    const Eigen::MatrixXcd& u_of(const GroupElement& g) const { return u[g.index()]; }
    const Eigen::MatrixXcd& V_of(const GroupElement& g) const { return V[g.index()]; }

    /// Max residual of sum_k u(g)_{jk} A^{(k)} = V(g)^dag A^{(j)} V(g) over
    /// all g and j.
    double push_through_residual(const MPSTensor& A) const;
};

/// Fixed-point boundary operators on a block of `support` chain sites, one
/// pair per group element. Where the blocked projector is not surjective the
/// operators are unitary on range(A^l) and zero outside it.
struct BoundaryOperatorPair {
    int support = 1;                   // chain sites covered by each operator
    std::vector<Eigen::MatrixXcd> VL;  // per element, d^support square
    std::vector<Eigen::MatrixXcd> VR;
    Eigen::MatrixXcd range_projector;  // A^l (A^l)^-1
};

/// Construct the boundary operators of a fixed-point tensor:
///   V^L(g) = A^l (1 (x) V(g)^dag) (A^l)^-1
///   V^R(g) = A^l (V(g)^T (x) 1) (A^l)^-1
/// with the bond pair ordered (left bond, right bond). `l` counts sites of
/// `A_fix` to block. Throws ValidationError("tensor is not at the fixed
/// point") when the results fail to be unitary on the range beyond
/// `unitarity_tol`.
BoundaryOperatorPair boundary_operators(const MPSTensor& A_fix, int l, const SymmetryData& sym,
                                        double unitarity_tol = 1e-8);

/// <S_[j,k](g)> on the periodic N-site chain: V^L(g) on sites [j, j+l),
/// u(g) on sites [j+l, k), V^R(g) on sites [k, k+l). Returns the real part;
/// throws if the imaginary part exceeds 1e-10.
double string_order(const MPSTensor& A, const SymmetryData& sym,
                    const BoundaryOperatorPair& bounds, const GroupElement& g, int j, int k,
                    int N);

/// <T^(g,h)_[j,k]> = <V^R_k(g) U(h) V^L_j(g) U_[j,k](g)>: the string-order
/// assembly with u(h) composed on every site of the chain.
cplx twisted_string_order(const MPSTensor& A, const SymmetryData& sym,
                          const BoundaryOperatorPair& bounds, const GroupElement& g,
                          const GroupElement& h, int j, int k, int N);

/// The ChainOps of the two assemblies, exposed for oracle cross-checking.
std::vector<ChainOp> string_order_ops(const SymmetryData& sym, const BoundaryOperatorPair& bounds,
                                      const GroupElement& g, int j, int k, int N);
std::vector<ChainOp> twisted_string_order_ops(const SymmetryData& sym,
                                              const BoundaryOperatorPair& bounds,
                                              const GroupElement& g, const GroupElement& h, int j,
                                              int k, int N);

/// Kronecker power u(h)^(x span).
Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& m, int power);

}  // namespace spto
