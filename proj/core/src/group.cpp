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

#include "spto/group.hpp"

#include <cmath>
#include <sstream>

namespace spto {

std::size_t GroupDescriptor::order() const {
    std::size_t n = 1;
    for (int m : moduli) {
        if (m < 1) throw ValidationError("group modulus must be >= 1");
        n *= static_cast<std::size_t>(m);
    }
    return n;
}

GroupElement::GroupElement(GroupDescriptor group, std::vector<int> components)
    : group_(std::move(group)), comps_(std::move(components)) {
    if (comps_.size() != group_.moduli.size())
        throw ValidationError("group element has wrong number of components");
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        comps_[i] %= group_.moduli[i];
        if (comps_[i] < 0) comps_[i] += group_.moduli[i];
    }
}

GroupElement GroupElement::from_index(const GroupDescriptor& group, std::size_t index) {
    std::vector<int> comps(group.moduli.size(), 0);
    for (std::size_t i = group.moduli.size(); i-- > 0;) {
        comps[i] = static_cast<int>(index % static_cast<std::size_t>(group.moduli[i]));
        index /= static_cast<std::size_t>(group.moduli[i]);
    }
    return GroupElement(group, std::move(comps));
}

GroupElement GroupElement::identity(const GroupDescriptor& group) {
    return GroupElement(group, std::vector<int>(group.moduli.size(), 0));
}

std::size_t GroupElement::index() const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        idx = idx * static_cast<std::size_t>(group_.moduli[i]) + static_cast<std::size_t>(comps_[i]);
    return idx;
}

bool GroupElement::is_identity() const {
    for (int c : comps_)
        if (c != 0) return false;
    return true;
}

GroupElement GroupElement::inverse() const {
    std::vector<int> comps(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i)
        comps[i] = (group_.moduli[i] - comps_[i]) % group_.moduli[i];
    return GroupElement(group_, std::move(comps));
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) os << (i ? "," : "") << comps_[i];
    os << ")";
    return os.str();
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    if (g.group() != h.group())
        throw ValidationError("cannot multiply elements of different groups");
    std::vector<int> comps(g.components().size());
    for (std::size_t i = 0; i < comps.size(); ++i)
        comps[i] = (g.components()[i] + h.components()[i]) % g.group().moduli[i];
    return GroupElement(g.group(), std::move(comps));
}

cplx snap_unit_phase(cplx v, double tol) {
    static const cplx exact[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const cplx& e : exact)
        if (std::abs(v - e) < tol) return e;
    return v;
}

CocycleTable::CocycleTable(GroupDescriptor group, std::vector<cplx> omega)
    : group_(std::move(group)), n_(group_.order()), omega_(std::move(omega)) {
    if (omega_.size() != n_ * n_)
        throw ValidationError("cocycle table is incomplete: expected |G|^2 entries");
    for (const cplx& w : omega_)
        if (std::abs(std::abs(w) - 1.0) > 1e-9)
            throw ValidationError("cocycle entries must have unit modulus");
}

CocycleTable CocycleTable::trivial(const GroupDescriptor& group) {
    return CocycleTable(group, std::vector<cplx>(group.order() * group.order(), cplx{1, 0}));
}

CocycleTable CocycleTable::pauli_z2xz2() {
    GroupDescriptor g = GroupDescriptor::z2xz2();
    std::vector<cplx> w(16);
    for (std::size_t gi = 0; gi < 4; ++gi) {
        for (std::size_t hi = 0; hi < 4; ++hi) {
            int b = static_cast<int>(gi & 1u);
            int c = static_cast<int>(hi >> 1u);
            w[gi * 4 + hi] = (b * c) % 2 ? cplx{-1, 0} : cplx{1, 0};
        }
    }
    return CocycleTable(g, std::move(w));
}

cplx CocycleTable::omega(const GroupElement& g, const GroupElement& h) const {
    if (g.group() != group_ || h.group() != group_)
        throw ValidationError("element does not belong to the table's group");
    return omega_[g.index() * n_ + h.index()];
}

cplx CocycleTable::omega_by_index(std::size_t gi, std::size_t hi) const {
    return omega_[gi * n_ + hi];
}

cplx twist_phase(const CocycleTable& table, const GroupElement& g, const GroupElement& h) {
    return snap_unit_phase(table.omega(g, h) / table.omega(h, g));
}

CocycleCheck verify_cocycle(const CocycleTable& table, double tol) {
    CocycleCheck result;
    const GroupDescriptor& G = table.group();
    const std::size_t n = table.size();
    for (std::size_t a = 0; a < n; ++a) {
        GroupElement ea = GroupElement::from_index(G, a);
        for (std::size_t b = 0; b < n; ++b) {
            GroupElement eb = GroupElement::from_index(G, b);
            std::size_t ab = multiply(ea, eb).index();
            for (std::size_t c = 0; c < n; ++c) {
                GroupElement ec = GroupElement::from_index(G, c);
                std::size_t bc = multiply(eb, ec).index();
                cplx lhs = table.omega_by_index(a, b) * table.omega_by_index(ab, c);
                cplx rhs = table.omega_by_index(a, bc) * table.omega_by_index(b, c);
                if (std::abs(lhs - rhs) > tol) result.violations.push_back({a, b, c});
            }
        }
    }
    result.ok = result.violations.empty();
    return result;
}

ProjectiveRep::ProjectiveRep(GroupDescriptor group, std::vector<Eigen::MatrixXcd> matrices)
    : group_(std::move(group)), mats_(std::move(matrices)) {
    if (mats_.size() != group_.order())
        throw ValidationError("projective rep needs one matrix per group element");
    const Eigen::Index d = mats_[0].rows();
    for (const auto& m : mats_)
        if (m.rows() != d || m.cols() != d)
            throw ValidationError("projective rep matrices must be square, same dimension");
}

ProjectiveRep ProjectiveRep::pauli_xz() {
    Eigen::MatrixXcd X(2, 2), Z(2, 2), I = Eigen::MatrixXcd::Identity(2, 2);
    X << 0, 1, 1, 0;
    Z << 1, 0, 0, -1;
    // lexicographic order: (0,0), (0,1), (1,0), (1,1)
    return ProjectiveRep(GroupDescriptor::z2xz2(), {I, Z, X, X * Z});
}

ProjectiveRep ProjectiveRep::diagonal_signs_z2xz2() {
    auto diag = [](double a, double b) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
        m(0, 0) = a;
        m(1, 1) = b;
        return m;
    };
    return ProjectiveRep(GroupDescriptor::z2xz2(),
                         {diag(1, 1), diag(1, -1), diag(-1, 1), diag(-1, -1)});
}

const Eigen::MatrixXcd& ProjectiveRep::matrix(const GroupElement& g) const {
    if (g.group() != group_) throw ValidationError("element does not belong to the rep's group");
    return mats_[g.index()];
}

double ProjectiveRep::unitarity_residual() const {
    double worst = 0;
    const Eigen::Index d = mats_[0].rows();
    for (const auto& m : mats_) {
        Eigen::MatrixXcd r = m.adjoint() * m - Eigen::MatrixXcd::Identity(d, d);
        worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
    return worst;
}

cplx projective_defect(const ProjectiveRep& rep, const GroupElement& g, const GroupElement& h,
                       double tol) {
    const Eigen::MatrixXcd p = rep.matrix(g) * rep.matrix(h);
    const Eigen::MatrixXcd& q = rep.matrix(multiply(g, h));
    const double qn2 = q.squaredNorm();
    cplx lambda = (q.adjoint() * p).trace() / qn2;
    Eigen::MatrixXcd resid = p - lambda * q;
    // operator norm via largest singular value
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(resid);
    if (svd.singularValues()(0) > tol)
        throw ValidationError("not a projective representation: V(g)V(h)V(gh)^-1 is not scalar");
    return snap_unit_phase(lambda);
}

CocycleTable extract_cocycle(const ProjectiveRep& rep, double tol) {
    const GroupDescriptor& G = rep.group();
    const std::size_t n = G.order();
    std::vector<cplx> w(n * n);
    for (std::size_t gi = 0; gi < n; ++gi)
        for (std::size_t hi = 0; hi < n; ++hi)
            w[gi * n + hi] = projective_defect(rep, GroupElement::from_index(G, gi),
                                               GroupElement::from_index(G, hi), tol);
    return CocycleTable(G, std::move(w));
}

}  // namespace spto
