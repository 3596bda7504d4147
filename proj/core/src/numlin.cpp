#include "silsp/numlin.hpp"

#include <Eigen/SVD>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace silsp {

double frobenius_norm(const Matrix& a) { return a.norm(); }

double spectral_norm(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

void check_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
}

double default_rank_rtol(Index rows, Index cols) {
  return static_cast<double>(std::max(rows, cols)) *
         std::numeric_limits<double>::epsilon();
}

TrimmedSvd trimmed_svd(const Matrix& x, double rtol) {
  check_finite(x, "trimmed_svd");
  if (rtol < 0) throw std::invalid_argument("trimmed_svd: rtol must be >= 0");
  const Index m = x.rows(), n = x.cols();
  if (rtol == 0.0) rtol = default_rank_rtol(m, n);

  TrimmedSvd out;
  if (m == 0 || n == 0) {
    out.U1.resize(m, 0);
    out.U2 = Matrix::Identity(m, m);
    out.V1.resize(n, 0);
    out.V2 = Matrix::Identity(n, n);
    out.sigma.resize(0);
    return out;
  }

  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const double cutoff = rtol * sv(0);
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff && sv(r) > 0.0) ++r;

  out.U1 = svd.matrixU().leftCols(r);
  out.U2 = svd.matrixU().rightCols(m - r);
  out.V1 = svd.matrixV().leftCols(r);
  out.V2 = svd.matrixV().rightCols(n - r);
  out.sigma = sv.head(r);
  return out;
}

Matrix pseudo_inverse(const Matrix& x, double rtol) {
  TrimmedSvd t = trimmed_svd(x, rtol);
  if (t.rank() == 0) return Matrix::Zero(x.cols(), x.rows());
  return t.V1 * t.sigma.cwiseInverse().asDiagonal().toDenseMatrix().cast<Complex>() *
         t.U1.adjoint();
}

RealMatrix coeff_matrix(const RealVector& sigma) {
  const Index r = sigma.size();
  if ((sigma.array() <= 0.0).any()) {
    throw std::invalid_argument("coeff_matrix: singular values must be positive");
  }
  RealMatrix d(r, r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      d(i, j) = 1.0 / (sigma(i) * sigma(i) + sigma(j) * sigma(j));
  return d;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hadamard: shape mismatch");
  }
  return a.cwiseProduct(b);
}

namespace {

// Shared eigendecomposition core for the two Hermitian square-root maps.
// f maps each (clamped) eigenvalue to its contribution.
Matrix hermitian_spectral_map(const Matrix& h, auto f) {
  if (h.size() == 0) return h;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian eigendecomposition failed");
  }
  RealVector lam = es.eigenvalues();
  for (Index i = 0; i < lam.size(); ++i) lam(i) = f(lam(i));
  return es.eigenvectors() *
         lam.asDiagonal().toDenseMatrix().cast<Complex>() *
         es.eigenvectors().adjoint();
}

}  // namespace

Matrix psd_sqrt(const Matrix& h, double tol) {
  check_finite(h, "psd_sqrt");
  if (h.rows() != h.cols()) throw std::invalid_argument("psd_sqrt: square input required");
  const double scale = spectral_norm(h);
  if ((h - h.adjoint()).norm() > tol * (1.0 + scale) * 1e4) {
    throw std::invalid_argument("psd_sqrt: input not Hermitian");
  }
  const Matrix hs = 0.5 * (h + h.adjoint());
  return hermitian_spectral_map(hs, [&](double lam) {
    if (lam < -tol * std::max(1.0, scale)) {
      throw std::invalid_argument("psd_sqrt: input not positive semidefinite");
    }
    return lam > 0.0 ? std::sqrt(lam) : 0.0;
  });
}

Matrix psd_pinv_sqrt(const Matrix& h, double threshold) {
  check_finite(h, "psd_pinv_sqrt");
  const Matrix hs = 0.5 * (h + h.adjoint());
  return hermitian_spectral_map(hs, [&](double lam) {
    return lam > threshold ? 1.0 / std::sqrt(lam) : 0.0;
  });
}

}  // namespace silsp
