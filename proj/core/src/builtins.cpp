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

#include "spto/builtins.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <cmath>

namespace spto {

namespace {

const cplx kI{0, 1};

Eigen::Matrix2cd pauli(int which) {  // 0: I, 1: X, 2: Y, 3: Z
    Eigen::Matrix2cd m;
    switch (which) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -kI, kI, 0; break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

// epsilon_{abc} over indices {x,y,z} = {0,1,2}
int epsilon(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

// lexicographic Z2xZ2 index -> sigma assignment: (0,0)->I, (0,1)->sigma_z,
// (1,0)->sigma_x, (1,1)->sigma_y (mu labels z, x, y respectively)
Eigen::Matrix2cd sigma_of_element(std::size_t idx) {
    switch (idx) {
        case 0: return pauli(0);
        case 1: return pauli(3);
        case 2: return pauli(1);
        default: return pauli(2);
    }
}

// mu in {x,y,z}={0,1,2} for nontrivial elements; -1 for identity
int mu_of_element(std::size_t idx) {
    switch (idx) {
        case 1: return 2;  // (0,1) -> z
        case 2: return 0;  // (1,0) -> x
        case 3: return 1;  // (1,1) -> y
        default: return -1;
    }
}

// u(mu) on one Cartesian spin-1 site: +1 on |mu>, -1 on the others
Eigen::MatrixXcd u3_of_element(std::size_t idx) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(3, 3);
    const int mu = mu_of_element(idx);
    if (mu < 0) return u;
    for (int n = 0; n < 3; ++n)
        if (n != mu) u(n, n) = -1;
    return u;
}

MPSTensor aklt_tensor() {
    MPSTensor t;
    t.d = 3;
    t.D = 2;
    const double s = 1.0 / std::sqrt(3.0);
    t.A = {s * pauli(1), s * pauli(2), s * pauli(3)};
    return t;
}

MPSTensor aklt_fixed_two_site() {
    MPSTensor t;
    t.d = 9;
    t.D = 2;
    const Eigen::VectorXcd e = aklt_singlet();
    std::array<Eigen::VectorXcd, 3> tri{aklt_triplet(0), aklt_triplet(1), aklt_triplet(2)};
    t.A.resize(9);
    for (int J = 0; J < 9; ++J) {
        Eigen::Matrix2cd m = 0.5 * e(J) * pauli(0);
        for (int mu = 0; mu < 3; ++mu) m += 0.5 * tri[static_cast<std::size_t>(mu)](J) * pauli(mu + 1);
        t.A[static_cast<std::size_t>(J)] = m;
    }
    return t;
}

Eigen::MatrixXcd aklt_isometry() {
    const Eigen::Vector2cd plus(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    const Eigen::Vector2cd minus(1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0));
    auto two = [](const Eigen::Vector2cd& a, const Eigen::Vector2cd& b) {
        return Eigen::kroneckerProduct(a, b).eval();
    };
    Eigen::MatrixXcd Pi = Eigen::MatrixXcd::Zero(4, 9);
    Pi += two(plus, plus) * aklt_singlet().adjoint();
    Pi += two(minus, plus) * aklt_triplet(2).adjoint();   // z~
    Pi += two(plus, minus) * aklt_triplet(0).adjoint();   // x~
    Pi += -kI * two(minus, minus) * aklt_triplet(1).adjoint();  // y~
    return Pi;
}

SymmetryData aklt_symmetry() {
    std::vector<Eigen::MatrixXcd> u, V;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        u.push_back(u3_of_element(idx));
        V.push_back(sigma_of_element(idx));
    }
    return SymmetryData::make(GroupDescriptor::z2xz2(), std::move(u), std::move(V));
}

SymmetryData aklt_fixed_symmetry() {
    std::vector<Eigen::MatrixXcd> u, V;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        const Eigen::MatrixXcd u1 = u3_of_element(idx);
        u.push_back(Eigen::kroneckerProduct(u1, u1).eval());
        V.push_back(sigma_of_element(idx));
    }
    return SymmetryData::make(GroupDescriptor::z2xz2(), std::move(u), std::move(V));
}

SymmetryData cluster_symmetry() {
    std::vector<Eigen::MatrixXcd> u, V;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        const int a = static_cast<int>(idx >> 1), b = static_cast<int>(idx & 1);
        const Eigen::Matrix2cd Xa = a ? pauli(1) : pauli(0);
        const Eigen::Matrix2cd Xb = b ? pauli(1) : pauli(0);
        u.push_back(Eigen::kroneckerProduct(Xa, Xb).eval());
        Eigen::Matrix2cd v = pauli(0);
        if (a) v = v * pauli(1);
        if (b) v = v * pauli(3);
        V.push_back(v);  // X^a Z^b
    }
    return SymmetryData::make(GroupDescriptor::z2xz2(), std::move(u), std::move(V));
}

// standard cluster-chain boundary operators:
// V^R((a,b)) = Z^b X^a (x) Z^a ; V^L((a,b)) = Z^b (x) Z^a X^b
BoundaryOperatorPair cluster_boundary_pair() {
    BoundaryOperatorPair out;
    out.support = 1;
    out.range_projector = Eigen::MatrixXcd::Identity(4, 4);
    for (std::size_t idx = 0; idx < 4; ++idx) {
        const int a = static_cast<int>(idx >> 1), b = static_cast<int>(idx & 1);
        auto P = [&](int which, int on) { return on ? pauli(which) : pauli(0); };
        Eigen::Matrix2cd right_first = P(3, b) * P(1, a);   // Z^b X^a
        Eigen::Matrix2cd right_second = P(3, a);            // Z^a
        Eigen::Matrix2cd left_first = P(3, b);              // Z^b
        Eigen::Matrix2cd left_second = P(3, a) * P(1, b);   // Z^a X^b
        out.VR.push_back(Eigen::kroneckerProduct(right_first, right_second).eval());
        out.VL.push_back(Eigen::kroneckerProduct(left_first, left_second).eval());
    }
    return out;
}

MPSTensor cluster_fixed_tensor() {
    const MPSTensor fix = aklt_fixed_two_site();
    const Eigen::MatrixXcd Pi = aklt_isometry();
    MPSTensor t;
    t.d = 4;
    t.D = 2;
    t.A.assign(4, Eigen::MatrixXcd::Zero(2, 2));
    for (int J = 0; J < 4; ++J)
        for (int K = 0; K < 9; ++K)
            t.A[static_cast<std::size_t>(J)] += Pi(J, K) * fix.A[static_cast<std::size_t>(K)];
    return t;
}

}  // namespace

Eigen::VectorXcd aklt_singlet() {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
    for (int n = 0; n < 3; ++n) v(3 * n + n) = 1.0 / std::sqrt(3.0);
    return v;
}

Eigen::VectorXcd aklt_triplet(int mu) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
    for (int n = 0; n < 3; ++n)
        for (int g = 0; g < 3; ++g) {
            const int eps = epsilon(mu, n, g);
            if (eps) v(3 * n + g) += kI / std::sqrt(2.0) * static_cast<double>(eps);
        }
    return v;
}

std::array<Eigen::MatrixXcd, 3> spin1_cartesian() {
    // standard spin-1 matrices in the S^z eigenbasis (|-1>, |0>, |+1>)
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3cd Sx, Sy, Sz;
    Sx << 0, r, 0, r, 0, r, 0, r, 0;
    Sy << 0, kI * r, 0, -kI * r, 0, kI * r, 0, -kI * r, 0;
    Sz << -1, 0, 0, 0, 0, 0, 0, 0, 1;
    // Cartesian kets in the spin basis: |x>=(-|+1>+|-1>)/sqrt2,
    // |y>=i(|+1>+|-1>)/sqrt2, |z>=|0>
    Eigen::Matrix3cd U;
    U.col(0) << r, 0, -r;
    U.col(1) << kI * r, 0, kI * r;
    U.col(2) << 0, 1, 0;
    return {U.adjoint() * Sx * U, U.adjoint() * Sy * U, U.adjoint() * Sz * U};
}

Eigen::MatrixXcd aklt_spin_form_boundary(int mu, bool left) {
    const auto S = spin1_cartesian();
    const Eigen::MatrixXcd id3 = Eigen::MatrixXcd::Identity(3, 3);
    const Eigen::MatrixXcd id9 = Eigen::MatrixXcd::Identity(9, 9);
    auto onsite = [&](int m, bool first) {
        return first ? Eigen::kroneckerProduct(S[static_cast<std::size_t>(m)], id3).eval()
                     : Eigen::kroneckerProduct(id3, S[static_cast<std::size_t>(m)]).eval();
    };
    Eigen::MatrixXcd S2 = Eigen::MatrixXcd::Zero(9, 9);
    for (int m = 0; m < 3; ++m) {
        const Eigen::MatrixXcd tot = onsite(m, true) + onsite(m, false);
        S2 += tot * tot;
    }
    auto anti = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        return (a * b + b * a).eval();
    };
    const Eigen::MatrixXcd diff = onsite(mu, true) - onsite(mu, false);
    const Eigen::MatrixXcd sum = onsite(mu, true) + onsite(mu, false);
    const Eigen::MatrixXcd t1 = anti((S2 - 4.0 * id9) / 2.0, diff) / std::sqrt(24.0);
    const Eigen::MatrixXcd t2 = anti(S2 * (6.0 * id9 - S2) / 8.0, sum) / 2.0;
    return left ? (t1 + t2).eval() : (t1 - t2).eval();
}

Eigen::VectorXcd cluster_ring_dense(int q) {
    if (q < 2) throw ValidationError("cluster ring needs at least 2 qubits");
    const std::size_t dim = 1ull << static_cast<unsigned>(q);
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim));
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t idx = 0; idx < dim; ++idx) {
        int sign = 0;
        for (int k = 0; k < q; ++k) {
            const int bk = static_cast<int>((idx >> (q - 1 - k)) & 1u);
            const int bk1 = static_cast<int>((idx >> (q - 1 - (k + 1) % q)) & 1u);
            sign ^= bk & bk1;
        }
        psi(static_cast<Eigen::Index>(idx)) = sign ? -amp : amp;
    }
    return psi;
}

GroupElement z2xz2_element(const std::string& label) {
    const GroupDescriptor G = GroupDescriptor::z2xz2();
    if (label == "e") return GroupElement(G, {0, 0});
    if (label == "z") return GroupElement(G, {0, 1});
    if (label == "x") return GroupElement(G, {1, 0});
    if (label == "y") return GroupElement(G, {1, 1});
    throw ValidationError("unknown group element label (use e, x, y or z): " + label);
}

std::string z2xz2_label(const GroupElement& g) {
    switch (g.index()) {
        case 0: return "e";
        case 1: return "z";
        case 2: return "x";
        default: return "y";
    }
}

BuiltinState builtin_state(const std::string& name) {
    if (name == "aklt") {
        BuiltinState st;
        st.name = name;
        st.tensor = aklt_tensor();
        st.sym = aklt_symmetry();
        st.fixed_tensor = aklt_fixed_two_site();
        st.fixed_sym = aklt_fixed_symmetry();
        st.bounds = boundary_operators(*st.fixed_tensor, 1, *st.fixed_sym);
        st.bounds.support = 2;  // the 9-dim operators cover two chain sites
        st.isometry = aklt_isometry();
        return st;
    }
    if (name == "cluster_fixed_point") {
        BuiltinState st;
        st.name = name;
        st.tensor = cluster_fixed_tensor();
        st.sym = cluster_symmetry();
        st.bounds = cluster_boundary_pair();
        return st;
    }
    throw ValidationError("unknown builtin tensor (use aklt or cluster_fixed_point): " + name);
}

}  // namespace spto
