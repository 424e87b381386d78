#pragma once

#include "wiretap/channel.hpp"

#include <Eigen/Dense>
#include <vector>

namespace wiretap {

/// Congruence factorization of a PSD Hermitian pair (q1, q2):
///   w^H q1 w = diag(eta, 0),   w^H (q1 + q2) w = diag(I_rank, 0),
/// so w^H q2 w = diag(1 - eta, 0). rank is the numerical rank of q1 + q2
/// and every eta entry lies in [0, 1].
struct SDFactorization {
    Matrix w;                  // T x T, invertible
    Eigen::VectorXd eta;       // length rank
    int rank = 0;
};

/// Simultaneous diagonalization of two PSD Hermitian matrices.
///
/// Construction: eigendecompose q1 + q2 (descending), keep the rank
/// eigenvalues above rank_tol * largest, scale those eigenvectors by
/// 1/sqrt(eigenvalue), then eigendecompose the compressed image of q1 to
/// get eta. Trailing blocks are completed with the identity. Eigenvector
/// phases are normalized (largest-magnitude entry real positive) and
/// eigenvalues sorted descending, so the output is deterministic.
///
/// Throws std::domain_error if an input is not Hermitian PSD within
/// tolerance.
SDFactorization simultaneous_diagonalize(const Matrix& q1, const Matrix& q2,
                                         double rank_tol = 1e-10);

/// Hermitian PD inverse square root: returns m with m * c * m = I.
/// Throws std::domain_error when c is singular (an eigenvalue at or below
/// 1e-12 times the largest).
Matrix inverse_sqrt_psd(const Matrix& c);

}  // namespace wiretap
