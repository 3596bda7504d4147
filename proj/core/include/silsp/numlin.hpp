#pragma once

#include <Eigen/Dense>
#include <complex>

namespace silsp {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Frobenius norm, sqrt(sum |a_ij|^2).
double frobenius_norm(const Matrix& a);

/// Spectral norm, the largest singular value. Zero for empty matrices.
double spectral_norm(const Matrix& a);

/// Throws std::invalid_argument if any entry is NaN or infinite.
void check_finite(const Matrix& a, const char* what);

/// Default relative rank tolerance: max(rows, cols) * machine epsilon.
double default_rank_rtol(Index rows, Index cols);

/// SVD of X restricted to the singular values above rtol * sigma_max,
/// with explicit orthonormal bases U2, V2 of the left/right complements.
///
/// X = U1 * diag(sigma) * V1^H,  [U1 U2] and [V1 V2] unitary.
struct TrimmedSvd {
  Matrix U1;          // rows x r
  Matrix U2;          // rows x (rows - r)
  Matrix V1;          // cols x r
  Matrix V2;          // cols x (cols - r)
  RealVector sigma;   // r positive values, non-increasing

  Index rank() const { return sigma.size(); }
};

/// rtol == 0 selects default_rank_rtol. X == 0 yields rank 0 with full
/// complements.
TrimmedSvd trimmed_svd(const Matrix& x, double rtol = 0.0);

/// Moore-Penrose pseudo-inverse, V1 * Sigma1^{-1} * U1^H.
Matrix pseudo_inverse(const Matrix& x, double rtol = 0.0);

/// D_ij = 1 / (sigma_i^2 + sigma_j^2) for a positive vector sigma.
RealMatrix coeff_matrix(const RealVector& sigma);

/// Entrywise (Hadamard) product. Shapes must agree.
Matrix hadamard(const Matrix& a, const Matrix& b);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues in
/// [-tol * ||H||_2, 0) are clamped to 0; smaller ones are rejected.
Matrix psd_sqrt(const Matrix& h, double tol = 1e-12);

/// Pseudo-inverse square root of a Hermitian PSD matrix: eigenvalues at or
/// below `threshold` (absolute) map to 0, the rest to 1/sqrt(lambda).
Matrix psd_pinv_sqrt(const Matrix& h, double threshold);

}  // namespace silsp
