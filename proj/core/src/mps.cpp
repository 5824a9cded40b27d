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

#include "spto/mps.hpp"

#include <algorithm>
#include <cmath>

namespace spto {

void MPSTensor::validate() const {
    if (d < 1 || D < 1) throw ValidationError("MPS tensor needs d >= 1 and D >= 1");
    if (A.size() != static_cast<std::size_t>(d))
        throw ValidationError("MPS tensor needs d component matrices");
    for (const auto& m : A) {
        if (m.rows() != D || m.cols() != D)
            throw ValidationError("MPS component matrices must be D x D");
        if (!m.allFinite()) throw ValidationError("MPS tensor has non-finite entries");
    }
}

Eigen::MatrixXcd transfer_matrix(const MPSTensor& A, const Eigen::MatrixXcd& O) {
    A.validate();
    if (O.rows() != A.d || O.cols() != A.d)
        throw ValidationError("site operator dimension mismatch");
    const int D = A.D;
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(D * D, D * D);
    for (int j = 0; j < A.d; ++j) {
        for (int k = 0; k < A.d; ++k) {
            const cplx o = O(j, k);
            if (o == cplx{0, 0}) continue;
            const Eigen::MatrixXcd& Ak = A.A[static_cast<std::size_t>(k)];
            const Eigen::MatrixXcd Ajc = A.A[static_cast<std::size_t>(j)].conjugate();
            for (int r1 = 0; r1 < D; ++r1)
                for (int r2 = 0; r2 < D; ++r2)
                    for (int c1 = 0; c1 < D; ++c1)
                        for (int c2 = 0; c2 < D; ++c2)
                            E(r1 * D + r2, c1 * D + c2) += o * Ak(r1, c1) * Ajc(r2, c2);
        }
    }
    return E;
}

Eigen::MatrixXcd identity_transfer(const MPSTensor& A) {
    return transfer_matrix(A, Eigen::MatrixXcd::Identity(A.d, A.d));
}

namespace {

void fix_vector_phase(Eigen::VectorXcd& v) {
    Eigen::Index imax = 0;
    double best = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > best + 1e-15) {
            best = std::abs(v(i));
            imax = i;
        }
    }
    if (best > 0) v *= std::abs(v(imax)) / v(imax);
}

}  // namespace

TransferSpectrum transfer_spectrum(const MPSTensor& A, double degeneracy_tol) {
    const Eigen::MatrixXcd E = identity_transfer(A);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(E);
    if (es.info() != Eigen::Success) throw ValidationError("transfer eigendecomposition failed");

    const Eigen::VectorXcd evals = es.eigenvalues();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(evals.size()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return std::abs(evals(a)) > std::abs(evals(b));
    });

    TransferSpectrum s;
    s.lambda1 = evals(order[0]);
    s.lambda2 = order.size() > 1 ? evals(order[1]) : cplx{0, 0};
    if (order.size() > 1 &&
        std::abs(s.lambda1) - std::abs(s.lambda2) < degeneracy_tol * std::abs(s.lambda1))
        throw ValidationError("non-injective MPS: degenerate dominant transfer eigenvalue");

    s.right = es.eigenvectors().col(order[0]);
    fix_vector_phase(s.right);

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> esl(E.adjoint());
    const Eigen::VectorXcd lvals = esl.eigenvalues();
    Eigen::Index best = 0;
    double bestdist = 1e300;
    for (Eigen::Index i = 0; i < lvals.size(); ++i) {
        double dist = std::abs(lvals(i) - std::conj(s.lambda1));
        if (dist < bestdist) {
            bestdist = dist;
            best = i;
        }
    }
    s.left = esl.eigenvectors().col(best);
    const cplx overlap = s.left.dot(s.right);  // <l|r>
    if (std::abs(overlap) < 1e-12)
        throw ValidationError("non-injective MPS: left/right eigenvectors are orthogonal");
    s.left /= std::conj(overlap);  // now l^dag r = 1
    return s;
}

double correlation_length(const MPSTensor& A) {
    TransferSpectrum s = transfer_spectrum(A);
    const double l2 = std::abs(s.lambda2) / std::abs(s.lambda1);
    if (l2 < 1e-12) return 0.0;  // rank-deficient transfer: zero length
    return 1.0 / std::log(1.0 / l2);
}

Eigen::MatrixXcd fixed_point_transfer(const MPSTensor& A) {
    TransferSpectrum s = transfer_spectrum(A);
    return s.right * s.left.adjoint();
}

MPSTensor normalized(const MPSTensor& A) {
    TransferSpectrum s = transfer_spectrum(A);
    const double scale = std::sqrt(std::abs(s.lambda1));
    MPSTensor out = A;
    for (auto& m : out.A) m /= scale;
    return out;
}

MPSTensor block_sites(const MPSTensor& A, int l) {
    A.validate();
    if (l < 1) throw ValidationError("blocking length must be >= 1");
    MPSTensor out = A;
    for (int step = 1; step < l; ++step) {
        MPSTensor next;
        next.d = out.d * A.d;
        next.D = A.D;
        next.A.reserve(static_cast<std::size_t>(next.d));
        // J = J_prev * d + j_new, with the new (later) site multiplied on the left
        for (int Jp = 0; Jp < out.d; ++Jp)
            for (int j = 0; j < A.d; ++j)
                next.A.push_back(A.A[static_cast<std::size_t>(j)] *
                                 out.A[static_cast<std::size_t>(Jp)]);
        out = std::move(next);
    }
    return out;
}

Eigen::MatrixXcd projector_map(const MPSTensor& A) {
    A.validate();
    const int D = A.D;
    Eigen::MatrixXcd M(A.d, D * D);
    for (int J = 0; J < A.d; ++J)
        for (int k = 0; k < D; ++k)
            for (int kp = 0; kp < D; ++kp)
                M(J, k * D + kp) = A.A[static_cast<std::size_t>(J)](k, kp);
    return M;
}

LeftInverse left_inverse(const MPSTensor& blocked, double rank_tol) {
    const Eigen::MatrixXcd M = projector_map(blocked);
    const int D2 = blocked.D * blocked.D;
    if (M.rows() < D2)
        throw ValidationError("not injective at this blocking; increase l");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = rank_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    if (rank < D2)
        throw ValidationError("not injective at this blocking; increase l");

    Eigen::VectorXd inv = sv;
    for (Eigen::Index i = 0; i < sv.size(); ++i) inv(i) = sv(i) > cutoff ? 1.0 / sv(i) : 0.0;
    LeftInverse li;
    li.map = svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
    li.projector = M * li.map;
    li.rank = rank;
    return li;
}

namespace {

// Blocked tensor components over [site, site+span), packed first-site-most-
// significant; matrix = product with later sites on the left.
std::vector<Eigen::MatrixXcd> span_matrices(const MPSTensor& A, int span) {
    std::vector<Eigen::MatrixXcd> cur{Eigen::MatrixXcd::Identity(A.D, A.D)};
    for (int s = 0; s < span; ++s) {
        std::vector<Eigen::MatrixXcd> next;
        next.reserve(cur.size() * static_cast<std::size_t>(A.d));
        for (const auto& m : cur)
            for (int j = 0; j < A.d; ++j)
                next.push_back(A.A[static_cast<std::size_t>(j)] * m);
        cur = std::move(next);
    }
    return cur;
}

Eigen::MatrixXcd span_transfer(const MPSTensor& A, const Eigen::MatrixXcd& op, int span) {
    const std::vector<Eigen::MatrixXcd> B = span_matrices(A, span);
    const int D = A.D;
    const auto dspan = static_cast<Eigen::Index>(B.size());
    if (op.rows() != dspan || op.cols() != dspan)
        throw ValidationError("chain operator dimension does not match its span");
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(D * D, D * D);
    for (Eigen::Index J = 0; J < dspan; ++J) {
        for (Eigen::Index K = 0; K < dspan; ++K) {
            const cplx o = op(J, K);
            if (o == cplx{0, 0}) continue;
            const Eigen::MatrixXcd& BK = B[static_cast<std::size_t>(K)];
            const Eigen::MatrixXcd BJc = B[static_cast<std::size_t>(J)].conjugate();
            for (int r1 = 0; r1 < D; ++r1)
                for (int r2 = 0; r2 < D; ++r2)
                    for (int c1 = 0; c1 < D; ++c1)
                        for (int c2 = 0; c2 < D; ++c2)
                            E(r1 * D + r2, c1 * D + c2) += o * BK(r1, c1) * BJc(r2, c2);
        }
    }
    return E;
}

}  // namespace

cplx expectation_chain(const MPSTensor& A, int N, const std::vector<ChainOp>& ops) {
    A.validate();
    if (N < 1) throw ValidationError("chain length must be >= 1");
    std::vector<ChainOp> sorted = ops;
    std::sort(sorted.begin(), sorted.end(),
              [](const ChainOp& a, const ChainOp& b) { return a.site < b.site; });
    int prev_end = 0;
    for (const ChainOp& o : sorted) {
        if (o.span < 1) throw ValidationError("chain operator span must be >= 1");
        if (o.site < prev_end) throw ValidationError("chain operators overlap");
        if (o.site + o.span > N) throw ValidationError("chain operator exceeds the chain");
        prev_end = o.site + o.span;
    }

    const Eigen::MatrixXcd E1 = identity_transfer(A);
    const int D2 = A.D * A.D;
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(D2, D2);
    int pos = 0;
    // lower sites are applied first, i.e. multiplied from the right
    for (const ChainOp& o : sorted) {
        for (; pos < o.site; ++pos) prod = E1 * prod;
        prod = span_transfer(A, o.op, o.span) * prod;
        pos += o.span;
    }
    for (; pos < N; ++pos) prod = E1 * prod;

    Eigen::MatrixXcd norm = Eigen::MatrixXcd::Identity(D2, D2);
    for (int s = 0; s < N; ++s) norm = E1 * norm;
    return prod.trace() / norm.trace();
}

Eigen::VectorXcd dense_state(const MPSTensor& A, int N, std::size_t max_dim) {
    A.validate();
    if (N < 1) throw ValidationError("chain length must be >= 1");
    std::size_t dim = 1;
    for (int s = 0; s < N; ++s) {
        dim *= static_cast<std::size_t>(A.d);
        if (dim > max_dim) throw ValidationError("dense state exceeds the configured size cap");
    }
    Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
    std::vector<int> js(static_cast<std::size_t>(N), 0);
    for (std::size_t I = 0; I < dim; ++I) {
        std::size_t rem = I;
        for (int s = N - 1; s >= 0; --s) {
            js[static_cast<std::size_t>(s)] = static_cast<int>(rem % static_cast<std::size_t>(A.d));
            rem /= static_cast<std::size_t>(A.d);
        }
        // site 0 applied first leaves its matrix rightmost in the product
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(A.D, A.D);
        for (int s = 0; s < N; ++s)
            m = A.A[static_cast<std::size_t>(js[static_cast<std::size_t>(s)])] * m;
        out(static_cast<Eigen::Index>(I)) = m.trace();
    }
    return out;
}

cplx dense_expectation(const MPSTensor& A, int N, const std::vector<ChainOp>& ops,
                       std::size_t max_dim) {
    const Eigen::VectorXcd psi = dense_state(A, N, max_dim);
    Eigen::VectorXcd v = psi;
    for (const ChainOp& o : ops) {
        if (o.site < 0 || o.site + o.span > N)
            throw ValidationError("chain operator exceeds the chain");
        std::size_t left = 1, right = 1, mid = 1;
        for (int s = 0; s < o.site; ++s) left *= static_cast<std::size_t>(A.d);
        for (int s = 0; s < o.span; ++s) mid *= static_cast<std::size_t>(A.d);
        for (int s = o.site + o.span; s < N; ++s) right *= static_cast<std::size_t>(A.d);
        if (o.op.rows() != static_cast<Eigen::Index>(mid))
            throw ValidationError("chain operator dimension does not match its span");
        Eigen::VectorXcd w = Eigen::VectorXcd::Zero(v.size());
        for (std::size_t a = 0; a < left; ++a) {
            for (std::size_t b = 0; b < right; ++b) {
                for (std::size_t r = 0; r < mid; ++r) {
                    cplx acc{0, 0};
                    for (std::size_t c = 0; c < mid; ++c) {
                        const cplx coef = o.op(static_cast<Eigen::Index>(r),
                                               static_cast<Eigen::Index>(c));
                        if (coef == cplx{0, 0}) continue;
                        acc += coef * v(static_cast<Eigen::Index>((a * mid + c) * right + b));
                    }
                    w(static_cast<Eigen::Index>((a * mid + r) * right + b)) = acc;
                }
            }
        }
        v = std::move(w);
    }
    const cplx denom = psi.squaredNorm();
    return psi.dot(v) / denom;
}

double win_probability_bound(double s_min) {
    if (s_min < -1.0 - 1e-12 || s_min > 1.0 + 1e-12)
        throw ValidationError("string order value must lie in [-1, 1]");
    return (13.0 + 3.0 * s_min) / 16.0;
}

}  // namespace spto
