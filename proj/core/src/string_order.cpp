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

#include "spto/string_order.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace spto {

SymmetryData SymmetryData::make(GroupDescriptor group, std::vector<Eigen::MatrixXcd> u,
                                std::vector<Eigen::MatrixXcd> V) {
    if (u.size() != group.order() || V.size() != group.order())
        throw ValidationError("symmetry data needs one u and one V per group element");
    ProjectiveRep rep(group, V);
    CocycleTable table = extract_cocycle(rep);
    return SymmetryData{std::move(group), std::move(u), std::move(V), std::move(table)};
}

double SymmetryData::push_through_residual(const MPSTensor& A) const {
    A.validate();
    double worst = 0;
    for (std::size_t gi = 0; gi < group.order(); ++gi) {
        const Eigen::MatrixXcd& ug = u[gi];
        const Eigen::MatrixXcd& Vg = V[gi];
        if (ug.rows() != A.d || Vg.rows() != A.D)
            throw ValidationError("symmetry data dimensions do not match the tensor");
        for (int j = 0; j < A.d; ++j) {
            Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(A.D, A.D);
            for (int k = 0; k < A.d; ++k) lhs += ug(j, k) * A.A[static_cast<std::size_t>(k)];
            Eigen::MatrixXcd rhs = Vg.adjoint() * A.A[static_cast<std::size_t>(j)] * Vg;
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    }
    return worst;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& m, int power) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int i = 0; i < power; ++i)
        out = Eigen::kroneckerProduct(out, m).eval();
    return out;
}

BoundaryOperatorPair boundary_operators(const MPSTensor& A_fix, int l, const SymmetryData& sym,
                                        double unitarity_tol) {
    const MPSTensor blocked = l == 1 ? A_fix : block_sites(A_fix, l);
    const LeftInverse li = left_inverse(blocked);
    const Eigen::MatrixXcd M = projector_map(blocked);
    const int D = blocked.D;
    const Eigen::MatrixXcd idD = Eigen::MatrixXcd::Identity(D, D);

    BoundaryOperatorPair out;
    out.support = l;
    out.range_projector = li.projector;
    out.VL.reserve(sym.group.order());
    out.VR.reserve(sym.group.order());
    for (std::size_t gi = 0; gi < sym.group.order(); ++gi) {
        const Eigen::MatrixXcd& Vg = sym.V[gi];
        if (Vg.rows() != D) throw ValidationError("virtual rep dimension must match the bond");
        Eigen::MatrixXcd VL =
            M * Eigen::kroneckerProduct(idD, Vg.adjoint()).eval() * li.map;
        Eigen::MatrixXcd VR =
            M * Eigen::kroneckerProduct(Vg.transpose(), idD).eval() * li.map;
        // unitary on the range of the blocked projector
        for (const Eigen::MatrixXcd* W : {&VL, &VR}) {
            const double resid = (W->adjoint() * (*W) - li.projector).cwiseAbs().maxCoeff();
            if (resid > unitarity_tol)
                throw ValidationError("tensor is not at the fixed point");
        }
        out.VL.push_back(std::move(VL));
        out.VR.push_back(std::move(VR));
    }
    return out;
}

std::vector<ChainOp> string_order_ops(const SymmetryData& sym, const BoundaryOperatorPair& bounds,
                                      const GroupElement& g, int j, int k, int N) {
    const int l = bounds.support;
    if (!(0 <= j && j + l <= k && k + l <= N))
        throw ValidationError("string endpoints must satisfy 0 <= j, j+l <= k, k+l <= N");
    const std::size_t gi = g.index();
    std::vector<ChainOp> ops;
    ops.push_back({j, l, bounds.VL[gi]});
    for (int p = j + l; p < k; ++p) ops.push_back({p, 1, sym.u[gi]});
    ops.push_back({k, l, bounds.VR[gi]});
    return ops;
}

std::vector<ChainOp> twisted_string_order_ops(const SymmetryData& sym,
                                              const BoundaryOperatorPair& bounds,
                                              const GroupElement& g, const GroupElement& h, int j,
                                              int k, int N) {
    const int l = bounds.support;
    if (!(0 <= j && j + l <= k && k + l <= N))
        throw ValidationError("string endpoints must satisfy 0 <= j, j+l <= k, k+l <= N");
    const std::size_t gi = g.index(), hi = h.index();
    const Eigen::MatrixXcd uh_block = kron_power(sym.u[hi], l);
    std::vector<ChainOp> ops;
    for (int p = 0; p < j; ++p) ops.push_back({p, 1, sym.u[hi]});
    // T = V^R_k(g) U(h) V^L_j(g) U_[j,k](g): rightmost factors act first
    ops.push_back({j, l, uh_block * bounds.VL[gi]});
    for (int p = j + l; p < k; ++p) ops.push_back({p, 1, sym.u[hi] * sym.u[gi]});
    ops.push_back({k, l, bounds.VR[gi] * uh_block});
    for (int p = k + l; p < N; ++p) ops.push_back({p, 1, sym.u[hi]});
    return ops;
}

double string_order(const MPSTensor& A, const SymmetryData& sym,
                    const BoundaryOperatorPair& bounds, const GroupElement& g, int j, int k,
                    int N) {
    const cplx v = expectation_chain(A, N, string_order_ops(sym, bounds, g, j, k, N));
    if (std::abs(v.imag()) > 1e-10)
        throw ValidationError("string order came out non-real; check the assembly");
    return v.real();
}

cplx twisted_string_order(const MPSTensor& A, const SymmetryData& sym,
                          const BoundaryOperatorPair& bounds, const GroupElement& g,
                          const GroupElement& h, int j, int k, int N) {
    return expectation_chain(A, N, twisted_string_order_ops(sym, bounds, g, h, j, k, N));
}

}  // namespace spto
