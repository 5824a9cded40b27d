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
#include <vector>

#include "spto/errors.hpp"

namespace spto {

using cplx = std::complex<double>;

// Conventions used throughout this module:
//  * amplitudes: psi(j_0..j_{N-1}) = Tr(A^{(j_{N-1})} ... A^{(j_0)});
//    dense indices pack site 0 most significant.
//  * transfer matrices act on the bond-pair space (ket bond (x) conjugated
//    bra bond), flattened row-major, so E_O = sum_{jk} O_{jk} A^{(k)} (x)
//    conj(A^{(j)}).
//  * blocked physical indices pack the first (lowest) site most significant;
//    the blocked matrix multiplies later sites to the left.

/// Uniform MPS site tensor: d complex D x D matrices.
struct MPSTensor {
    int d = 0;
    int D = 0;
    std::vector<Eigen::MatrixXcd> A;

    void validate() const;
};

/// Single-site (or blocked-site) operator wrapped with its chain placement.
struct ChainOp {
    int site = 0;
    int span = 1;              // number of chain sites covered
    Eigen::MatrixXcd op;       // d^span x d^span, first covered site most significant
};

Eigen::MatrixXcd transfer_matrix(const MPSTensor& A, const Eigen::MatrixXcd& O);
Eigen::MatrixXcd identity_transfer(const MPSTensor& A);

struct TransferSpectrum {
    cplx lambda1;              // dominant eigenvalue
    cplx lambda2;              // second largest by modulus
    Eigen::VectorXcd right;    // E r = lambda1 r
    Eigen::VectorXcd left;     // l^dag E = lambda1 l^dag, normalized so l^dag r = 1
};

/// Eigen-decomposition of E_1 with a deterministic phase convention (the
/// dominant eigenvector's largest-magnitude entry is made real positive).
/// Throws ValidationError("non-injective MPS") when the dominant eigenvalue
/// is degenerate in modulus.
TransferSpectrum transfer_spectrum(const MPSTensor& A, double degeneracy_tol = 1e-10);

/// xi = 1/ln(1/|lambda2|), with lambda1 rescaled to modulus one; 0 when
/// lambda2 = 0.
double correlation_length(const MPSTensor& A);

/// Rank-one |r><l| / <l|r> projector onto the dominant eigenpair.
Eigen::MatrixXcd fixed_point_transfer(const MPSTensor& A);

/// Rescale so the dominant transfer eigenvalue has modulus 1.
MPSTensor normalized(const MPSTensor& A);

/// Block l sites into one: physical index packs the first site most
/// significant, matrix = A^{(j_{l-1})} ... A^{(j_0)} (later sites leftward,
/// matching the trace formula). E of the result equals E_1^l.
MPSTensor block_sites(const MPSTensor& A, int l);

struct LeftInverse {
    Eigen::MatrixXcd map;        // D^2 x d^l pseudo-inverse of the MPS projector
    Eigen::MatrixXcd projector;  // A^l (A^l)^-1, projector onto range(A^l)
    int rank = 0;
};

/// The MPS projector of a (blocked) tensor as a d x D^2 matrix; bond pair
/// (k, k') flattened row-major as k*D + k'.
Eigen::MatrixXcd projector_map(const MPSTensor& A);

/// Pseudo-inverse of the MPS projector. Throws
/// ValidationError("not injective at this blocking; increase l") when the
/// numerical rank (singular values above rank_tol * s_max) is below D^2.
LeftInverse left_inverse(const MPSTensor& blocked, double rank_tol = 1e-10);

/// <psi| O_1 ... O_m |psi> / <psi|psi> on the periodic N-site chain via
/// transfer matrices; identity channels fill the gaps. Operator supports must
/// not overlap and must fit inside the chain without wrapping.
cplx expectation_chain(const MPSTensor& A, int N, const std::vector<ChainOp>& ops);

/// Unnormalized amplitudes by direct trace; throws when d^N exceeds
/// `max_dim` (the brute-force oracle for every expectation value).
Eigen::VectorXcd dense_state(const MPSTensor& A, int N, std::size_t max_dim = 1u << 20);

/// Same expectation as expectation_chain, evaluated by dense contraction.
cplx dense_expectation(const MPSTensor& A, int N, const std::vector<ChainOp>& ops,
                       std::size_t max_dim = 1u << 20);

/// (13 + 3 S_min) / 16; requires -1 <= S_min <= 1.
double win_probability_bound(double s_min);

}  // namespace spto
