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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "spto/builtins.hpp"
#include "spto/mps.hpp"

using namespace spto;

namespace {

std::vector<double> sorted_moduli(const Eigen::MatrixXcd& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    std::vector<double> mods;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        mods.push_back(std::abs(es.eigenvalues()(i)));
    std::sort(mods.begin(), mods.end(), std::greater<double>());
    return mods;
}

}  // namespace

TEST_CASE("AKLT transfer matrix spectrum") {
    const BuiltinState aklt = builtin_state("aklt");
    const Eigen::MatrixXcd E = identity_transfer(aklt.tensor);
    const auto mods = sorted_moduli(E);
    REQUIRE(mods.size() == 4);
    CHECK(mods[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(mods[static_cast<std::size_t>(i)] == doctest::Approx(1.0 / 3).epsilon(1e-12));

    // the subleading eigenvalues carry sign -1/3, matching the
    // (-1/3)^(N-4) decay of the string-order closed form
    const TransferSpectrum spec = transfer_spectrum(aklt.tensor);
    CHECK(std::abs(spec.lambda1 - cplx{1, 0}) < 1e-12);
    CHECK(std::abs(spec.lambda2 - cplx{-1.0 / 3, 0}) < 1e-12);
}

TEST_CASE("E_{u(z)} is diagonal in the SM Bell ordering") {
    const BuiltinState aklt = builtin_state("aklt");
    const GroupElement z = z2xz2_element("z");
    const Eigen::MatrixXcd E = transfer_matrix(aklt.tensor, aklt.sym.u_of(z));
    // Bell ordering (phi+, psi+, psi-, phi-): diag(-1/3, -1/3, -1/3, 1)
    Eigen::MatrixXcd B(4, 4);
    const double r = 1 / std::sqrt(2.0);
    B.col(0) << r, 0, 0, r;    // phi+
    B.col(1) << 0, r, r, 0;    // psi+
    B.col(2) << 0, r, -r, 0;   // psi-
    B.col(3) << r, 0, 0, -r;   // phi-
    const Eigen::MatrixXcd D = B.adjoint() * E * B;
    Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
    expect(0, 0) = -1.0 / 3;
    expect(1, 1) = -1.0 / 3;
    expect(2, 2) = -1.0 / 3;
    expect(3, 3) = 1.0;
    CHECK((D - expect).cwiseAbs().maxCoeff() < 1e-12);

    // zero operator -> zero channel
    CHECK(transfer_matrix(aklt.tensor, Eigen::MatrixXcd::Zero(3, 3)).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("correlation lengths and fixed-point transfer") {
    const BuiltinState aklt = builtin_state("aklt");
    CHECK(correlation_length(aklt.tensor) == doctest::Approx(1.0 / std::log(3.0)).epsilon(1e-12));
    CHECK(std::abs(transfer_spectrum(aklt.tensor).lambda2) ==
          doctest::Approx(1.0 / 3).epsilon(1e-12));

    const BuiltinState cfp = builtin_state("cluster_fixed_point");
    CHECK(correlation_length(cfp.tensor) == doctest::Approx(0.0));

    const Eigen::MatrixXcd fix = fixed_point_transfer(aklt.tensor);
    CHECK((fix * fix - fix).cwiseAbs().maxCoeff() < 1e-12);  // rank-one projector
    // diag(1,0,0,0) in the Bell ordering: the dominant pair is phi+
    Eigen::VectorXcd phip(4);
    phip << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
    CHECK((fix * phip - phip).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(fix.trace() - cplx{1, 0}) < 1e-12);

    // applying it to an already-fixed-point tensor changes nothing
    const Eigen::MatrixXcd cfix = identity_transfer(cfp.tensor);
    CHECK((fixed_point_transfer(cfp.tensor) - cfix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("degenerate dominant eigenvalue is rejected") {
    // GHZ-type tensor: A0 = |0><0|, A1 = |1><1| gives E with doubly
    // degenerate dominant eigenvalue
    MPSTensor ghz;
    ghz.d = 2;
    ghz.D = 2;
    ghz.A = {Eigen::MatrixXcd::Zero(2, 2), Eigen::MatrixXcd::Zero(2, 2)};
    ghz.A[0](0, 0) = 1;
    ghz.A[1](1, 1) = 1;
    CHECK_THROWS_AS(transfer_spectrum(ghz), ValidationError);
    CHECK_THROWS_AS(correlation_length(ghz), ValidationError);
}

TEST_CASE("blocking composes transfer matrices; two-site tensor in the tilde basis") {
    const BuiltinState aklt = builtin_state("aklt");
    const MPSTensor b1 = block_sites(aklt.tensor, 1);
    for (int j = 0; j < 3; ++j)
        CHECK((b1.A[static_cast<std::size_t>(j)] - aklt.tensor.A[static_cast<std::size_t>(j)])
                  .cwiseAbs()
                  .maxCoeff() == 0);

    const MPSTensor b2 = block_sites(aklt.tensor, 2);
    const Eigen::MatrixXcd E1 = identity_transfer(aklt.tensor);
    CHECK((identity_transfer(b2) - E1 * E1).cwiseAbs().maxCoeff() < 1e-12);

    // the tilde-basis form (1/sqrt3) 1 (x) |e~> + sqrt(2/9) sum sigma_mu (x) |mu~>
    // reads |mu nu> first-site-most-significant and equals block_sites
    // after the site-swap change of basis
    const Eigen::VectorXcd e = aklt_singlet();
    std::array<Eigen::VectorXcd, 3> tri{aklt_triplet(0), aklt_triplet(1), aklt_triplet(2)};
    Eigen::MatrixXcd X(2, 2), Y(2, 2), Z(2, 2), I2 = Eigen::MatrixXcd::Identity(2, 2);
    X << 0, 1, 1, 0;
    Y << 0, cplx{0, -1}, cplx{0, 1}, 0;
    Z << 1, 0, 0, -1;
    const std::array<Eigen::MatrixXcd, 3> sig{X, Y, Z};
    for (int J = 0; J < 9; ++J) {
        Eigen::MatrixXcd tilde_form = e(J) / std::sqrt(3.0) * I2;
        for (int mu = 0; mu < 3; ++mu)
            tilde_form += std::sqrt(2.0 / 9) * tri[static_cast<std::size_t>(mu)](J) *
                       sig[static_cast<std::size_t>(mu)];
        const int swapped = (J % 3) * 3 + (J / 3);
        CHECK((b2.A[static_cast<std::size_t>(swapped)] - tilde_form).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("left inverse: isometry case, dimension counting, composition") {
    const BuiltinState cfp = builtin_state("cluster_fixed_point");
    // blocked cluster fixed point: pseudo-inverse proportional to the adjoint
    const MPSTensor b2 = block_sites(cfp.tensor, 2);
    const LeftInverse li = left_inverse(b2);
    const Eigen::MatrixXcd M = projector_map(b2);
    // M+ = c M^dag for an isometry-like map; fix c from the norms
    const double c = li.map.norm() / M.adjoint().norm();
    CHECK((li.map - c * M.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

    // AKLT at l = 1: d = 3 < D^2 = 4
    const BuiltinState aklt = builtin_state("aklt");
    CHECK_THROWS_WITH_AS(left_inverse(aklt.tensor),
                         "not injective at this blocking; increase l", ValidationError);

    // AKLT at l = 2: valid left inverse, composition is the identity
    const LeftInverse li2 = left_inverse(block_sites(aklt.tensor, 2));
    const Eigen::MatrixXcd M2 = projector_map(block_sites(aklt.tensor, 2));
    CHECK((li2.map * M2 - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(li2.rank == 4);
}

TEST_CASE("expectation_chain basics") {
    const BuiltinState aklt = builtin_state("aklt");
    CHECK(std::abs(expectation_chain(aklt.tensor, 6, {}) - cplx{1, 0}) < 1e-12);

    // single u(z): chain vs dense oracle
    const GroupElement z = z2xz2_element("z");
    const ChainOp op{2, 1, aklt.sym.u_of(z)};
    const cplx chain = expectation_chain(aklt.tensor, 6, {op});
    const cplx dense = dense_expectation(aklt.tensor, 6, {op});
    CHECK(std::abs(chain - dense) < 1e-10);

    // overlapping supports are rejected
    CHECK_THROWS_AS(expectation_chain(aklt.tensor, 6,
                                      {ChainOp{0, 2, Eigen::MatrixXcd::Identity(9, 9)},
                                       ChainOp{1, 1, aklt.sym.u_of(z)}}),
                    ValidationError);
}

TEST_CASE("oracle equivalence on randomized operator placements") {
    const BuiltinState aklt = builtin_state("aklt");
    const BuiltinState cfp = builtin_state("cluster_fixed_point");
    std::mt19937_64 rng(31);
    auto random_matrix = [&](int dim) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                m(r, c) = cplx{std::uniform_real_distribution<double>(-1, 1)(rng),
                               std::uniform_real_distribution<double>(-1, 1)(rng)};
        return m;
    };
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const bool use_aklt = trial % 2 == 0;
        const MPSTensor& A = use_aklt ? aklt.tensor : cfp.tensor;
        const int N = 4 + static_cast<int>(rng() % 3);
        std::vector<ChainOp> ops;
        int pos = 0;
        while (pos < N) {
            if (rng() % 3 == 0) {
                const int span = (rng() % 2 == 0 && pos + 2 <= N) ? 2 : 1;
                int dim = 1;
                for (int s = 0; s < span; ++s) dim *= A.d;
                ops.push_back({pos, span, random_matrix(dim)});
                pos += span;
            } else {
                ++pos;
            }
        }
        if (ops.empty()) continue;
        const cplx chain = expectation_chain(A, N, ops);
        const cplx dense = dense_expectation(A, N, ops);
        CHECK(std::abs(chain - dense) < 1e-10);
        ++checked;
    }
    CHECK(checked >= 12);
}

TEST_CASE("dense_state reproduces the ring cluster state") {
    const BuiltinState cfp = builtin_state("cluster_fixed_point");
    for (int N : {2, 3, 4}) {
        Eigen::VectorXcd psi = dense_state(cfp.tensor, N);
        psi.normalize();
        const Eigen::VectorXcd ref = cluster_ring_dense(2 * N);
        CHECK(std::abs(std::abs(ref.dot(psi)) - 1.0) < 1e-10);
    }
}

TEST_CASE("dense_state caps and small cases") {
    const BuiltinState aklt = builtin_state("aklt");
    CHECK_THROWS_AS(dense_state(aklt.tensor, 20), ValidationError);

    // D = 1 delta-like tensor: product state
    MPSTensor prod;
    prod.d = 2;
    prod.D = 1;
    prod.A = {Eigen::MatrixXcd::Constant(1, 1, 0.6), Eigen::MatrixXcd::Constant(1, 1, 0.8)};
    const Eigen::VectorXcd psi = dense_state(prod, 1);
    CHECK(std::abs(psi(0) - cplx{0.6, 0}) < 1e-15);
    CHECK(std::abs(psi(1) - cplx{0.8, 0}) < 1e-15);
}

TEST_CASE("AKLT two-site dense state lives in the singlet+triplet sector") {
    const BuiltinState aklt = builtin_state("aklt");
    const Eigen::VectorXcd psi = dense_state(aklt.tensor, 2);
    // project out singlet and triplet: the remainder (spin-2 part) vanishes
    Eigen::MatrixXcd P = aklt_singlet() * aklt_singlet().adjoint();
    for (int mu = 0; mu < 3; ++mu) P += aklt_triplet(mu) * aklt_triplet(mu).adjoint();
    CHECK(((Eigen::MatrixXcd::Identity(9, 9) - P) * psi).norm() < 1e-12);
    CHECK(psi.norm() > 0.1);
}

TEST_CASE("win probability bound") {
    CHECK(win_probability_bound(1.0) == doctest::Approx(1.0));
    CHECK(win_probability_bound(1.0 / 3) == doctest::Approx(7.0 / 8).epsilon(1e-15));
    const double s_inf = 4.0 / 9 * std::pow(std::sqrt(2.0 / 3) + 2.0 / 3, 2);
    CHECK(win_probability_bound(s_inf) ==
          doctest::Approx(13.0 / 16 + s_inf * 3 / 16).epsilon(1e-15));
    CHECK(win_probability_bound(s_inf) == doctest::Approx(0.9958).epsilon(1e-3));
    CHECK_THROWS_AS(win_probability_bound(1.5), ValidationError);
}

TEST_CASE("normalization rescales the dominant eigenvalue to one") {
    const BuiltinState aklt = builtin_state("aklt");
    MPSTensor scaled = aklt.tensor;
    for (auto& m : scaled.A) m *= 1.7;
    const MPSTensor back = normalized(scaled);
    CHECK(std::abs(transfer_spectrum(back).lambda1) == doctest::Approx(1.0).epsilon(1e-12));
}
