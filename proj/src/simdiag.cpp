#include "wiretap/simdiag.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wiretap {

namespace {

void check_hermitian_psd(const Matrix& q, const char* name) {
    if (q.rows() != q.cols())
        throw std::invalid_argument("matrix must be square");
    if (!q.allFinite())
        throw std::domain_error("matrix must be finite");
    const double scale = 1.0 + q.norm();
    if ((q - q.adjoint().eval()).norm() > 1e-10 * scale)
        throw std::domain_error(std::string(name) + " is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (q + q.adjoint().eval()),
                                             Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = std::max(es.eigenvalues().maxCoeff(), 0.0);
    if (lo < -1e-10 * (1.0 + hi))
        throw std::domain_error(std::string(name) +
                                " is not positive semidefinite");
}

// Scale each column so its largest-magnitude entry is real positive; makes
// eigenbases reproducible across runs despite phase ambiguity.
void normalize_phases(Matrix& v) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        Eigen::Index imax = 0;
        v.col(j).cwiseAbs().maxCoeff(&imax);
        const cxd pivot = v(imax, j);
        const double mag = std::abs(pivot);
        if (mag > 0.0) v.col(j) *= std::conj(pivot) / mag;
    }
}

// Hermitian eigendecomposition with eigenvalues sorted descending and
// normalized phases.
void eig_descending(const Matrix& q, Eigen::VectorXd& vals, Matrix& vecs) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (q + q.adjoint().eval()));
    if (es.info() != Eigen::Success)
        throw std::domain_error("eigendecomposition failed");
    const Eigen::Index n = q.rows();
    vals.resize(n);
    vecs.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        vals(i) = es.eigenvalues()(n - 1 - i);
        vecs.col(i) = es.eigenvectors().col(n - 1 - i);
    }
    normalize_phases(vecs);
}

}  // namespace

SDFactorization simultaneous_diagonalize(const Matrix& q1, const Matrix& q2,
                                         double rank_tol) {
    check_hermitian_psd(q1, "q1");
    check_hermitian_psd(q2, "q2");
    if (q1.rows() != q2.rows())
        throw std::invalid_argument("q1/q2 dimension mismatch");
    const int t = static_cast<int>(q1.rows());

    Eigen::VectorXd upsilon;
    Matrix psi1;
    eig_descending(q1 + q2, upsilon, psi1);

    const double top = std::max(upsilon(0), 0.0);
    int rank = 0;
    while (rank < t && upsilon(rank) > rank_tol * top) ++rank;

    SDFactorization sd;
    sd.rank = rank;
    sd.w = Matrix::Identity(t, t);
    sd.eta.resize(rank);
    if (rank == 0) return sd;

    // W1 = Psi1 * diag(Upsilon^-1/2, I).
    Matrix w1 = psi1;
    for (int j = 0; j < rank; ++j) w1.col(j) /= std::sqrt(upsilon(j));

    // J = leading rank x rank block of W1^H q1 W1; its eigenvalues are eta.
    const Matrix w1a = w1.leftCols(rank);
    Matrix j = w1a.adjoint() * q1 * w1a;

    Eigen::VectorXd eta;
    Matrix psi2;
    eig_descending(j, eta, psi2);

    sd.w = w1;
    sd.w.leftCols(rank) = w1a * psi2;
    for (int i = 0; i < rank; ++i)
        sd.eta(i) = std::clamp(eta(i), 0.0, 1.0);
    return sd;
}

Matrix inverse_sqrt_psd(const Matrix& c) {
    check_hermitian_psd(c, "c");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (c + c.adjoint().eval()));
    if (es.info() != Eigen::Success)
        throw std::domain_error("eigendecomposition failed");
    const Eigen::VectorXd& vals = es.eigenvalues();
    const double top = vals.maxCoeff();
    if (top <= 0.0 || vals.minCoeff() <= 1e-12 * top)
        throw std::domain_error("matrix is numerically singular");
    Eigen::VectorXd inv_sqrt = vals.array().rsqrt();
    Matrix m = es.eigenvectors() * inv_sqrt.asDiagonal() *
               es.eigenvectors().adjoint();
    return 0.5 * (m + m.adjoint().eval());
}

}  // namespace wiretap
