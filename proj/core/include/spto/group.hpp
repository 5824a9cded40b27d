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
#include <cstddef>
#include <string>
#include <vector>

#include "spto/errors.hpp"

namespace spto {

using cplx = std::complex<double>;

/// Finite abelian group Z_{n_1} x ... x Z_{n_k}, compared structurally.
struct GroupDescriptor {
    std::vector<int> moduli;

    std::size_t order() const;
    bool operator==(const GroupDescriptor& o) const { return moduli == o.moduli; }
    bool operator!=(const GroupDescriptor& o) const { return !(*this == o); }

    static GroupDescriptor z2xz2() { return GroupDescriptor{{2, 2}}; }
};

/// Element of a finite abelian group; componentwise residues.
class GroupElement {
  public:
    GroupElement(GroupDescriptor group, std::vector<int> components);

    /// Element from its lexicographic index (first component most significant).
    static GroupElement from_index(const GroupDescriptor& group, std::size_t index);
    static GroupElement identity(const GroupDescriptor& group);

    const GroupDescriptor& group() const { return group_; }
    const std::vector<int>& components() const { return comps_; }
    std::size_t index() const;
    bool is_identity() const;
    GroupElement inverse() const;

    bool operator==(const GroupElement& o) const {
        return group_ == o.group_ && comps_ == o.comps_;
    }

    std::string str() const;

  private:
    GroupDescriptor group_;
    std::vector<int> comps_;
};

/// Componentwise sum mod n_i. Throws ValidationError on mismatched groups.
GroupElement multiply(const GroupElement& g, const GroupElement& h);

/// Snap a unit-modulus value to an exact element of {1, -1, i, -i} when it is
/// within `tol`; otherwise return it unchanged.
cplx snap_unit_phase(cplx v, double tol = 1e-12);

struct CocycleViolation {
    std::size_t a, b, c;  // element indices of the violating triple
};

struct CocycleCheck {
    bool ok = false;
    std::vector<CocycleViolation> violations;
};

/// 2-cocycle omega: G x G -> U(1), stored densely in lexicographic element
/// order, row-major over (g, h).
class CocycleTable {
  public:
    CocycleTable() : CocycleTable(GroupDescriptor{{1}}, {cplx{1, 0}}) {}  // trivial group
    CocycleTable(GroupDescriptor group, std::vector<cplx> omega);

    /// omega == 1 everywhere.
    static CocycleTable trivial(const GroupDescriptor& group);
    /// The Pauli multiplication phase on Z2xZ2: omega((a,b),(c,d)) = (-1)^{bc},
    /// realized by V((a,b)) = X^a Z^b. A representative of the nontrivial
    /// class; only the twist it induces is pinned by the physics.
    static CocycleTable pauli_z2xz2();

    const GroupDescriptor& group() const { return group_; }
    cplx omega(const GroupElement& g, const GroupElement& h) const;
    cplx omega_by_index(std::size_t gi, std::size_t hi) const;

    std::size_t size() const { return n_; }

  private:
    GroupDescriptor group_;
    std::size_t n_;
    std::vector<cplx> omega_;
};

/// Omega(g,h) = omega(g,h)/omega(h,g).
cplx twist_phase(const CocycleTable& table, const GroupElement& g, const GroupElement& h);

/// Exhaustive |G|^3 check of omega(a,b) omega(ab,c) == omega(a,bc) omega(b,c).
CocycleCheck verify_cocycle(const CocycleTable& table, double tol = 1e-12);

/// Projective representation: one unitary per group element, indexed
/// lexicographically.
class ProjectiveRep {
  public:
    ProjectiveRep(GroupDescriptor group, std::vector<Eigen::MatrixXcd> matrices);

    /// V((a,b)) = X^a Z^b on one qubit.
    static ProjectiveRep pauli_xz();
    /// Ordinary (non-projective) rep of Z2xZ2 by diagonal signs.
    static ProjectiveRep diagonal_signs_z2xz2();

    const GroupDescriptor& group() const { return group_; }
    const Eigen::MatrixXcd& matrix(const GroupElement& g) const;
    const Eigen::MatrixXcd& matrix_by_index(std::size_t i) const { return mats_[i]; }
    std::size_t dim() const { return static_cast<std::size_t>(mats_[0].rows()); }

    /// Max unitarity residual over all elements.
    double unitarity_residual() const;

  private:
    GroupDescriptor group_;
    std::vector<Eigen::MatrixXcd> mats_;
};

/// The scalar lambda with V(g)V(h) = lambda V(gh). Throws if V(g)V(h)V(gh)^-1
/// deviates from a scalar by more than `tol` in operator norm.
cplx projective_defect(const ProjectiveRep& rep, const GroupElement& g, const GroupElement& h,
                       double tol = 1e-10);

/// Assemble the full defect table of a rep; the result should pass
/// verify_cocycle for any genuine projective representation.
CocycleTable extract_cocycle(const ProjectiveRep& rep, double tol = 1e-10);

}  // namespace spto
