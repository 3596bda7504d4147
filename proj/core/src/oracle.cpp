#include "silsp/oracle.hpp"

#include <Eigen/SVD>

#include <stdexcept>
#include <vector>

namespace silsp {

namespace {

RealVector vec_real(const Matrix& m) {
  RealVector v(2 * m.size());
  Index k = 0;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      v(k++) = std::real(m(i, j));
    }
  }
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      v(k++) = std::imag(m(i, j));
    }
  }
  return v;
}

double re_trace_inner(const Matrix& a, const Matrix& b) {
  return std::real((a.adjoint() * b).trace());
}

// Basis of a Jordan/Lie class: project the elementary directions onto the
// class and orthonormalize by modified Gram-Schmidt under re Tr(A^H B).
std::vector<Matrix> projected_basis(const StructureClass& s, Index n) {
  std::vector<Matrix> candidates;
  const Complex iu(0.0, 1.0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      candidates.push_back(structured_project(e, s));
      if (s.field == Field::Complex) {
        candidates.push_back(structured_project(iu * e, s));
      }
    }
  }
  std::vector<Matrix> basis;
  for (Matrix v : candidates) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const Matrix& e : basis) v -= re_trace_inner(e, v) * e;
    }
    const double nv = v.norm();
    if (nv > 1e-10) basis.push_back(v / nv);
  }
  return basis;
}

}  // namespace

OracleResult oracle_solve(const StructureClass& s, const Matrix& x,
                          const Matrix& b, Index cap) {
  check_finite(x, "oracle X");
  check_finite(b, "oracle B");
  const Index n = x.rows();
  if (b.rows() != n || b.cols() != x.cols()) {
    throw std::invalid_argument("oracle_solve: X and B must have equal shape");
  }
  if (n > cap) {
    throw std::invalid_argument("oracle_solve: dimension cap exceeded");
  }

  const std::vector<Matrix> basis =
      s.is_prototype() ? orthonormal_basis(s, n) : projected_basis(s, n);
  const Index dim = static_cast<Index>(basis.size());
  if (dim == 0) {
    OracleResult out;
    out.a_min_fro = Matrix::Zero(n, n);
    out.rho = b.norm();
    return out;
  }

  RealMatrix lsq(2 * n * x.cols(), dim);
  for (Index k = 0; k < dim; ++k) {
    lsq.col(k) = vec_real(basis[k] * x);
  }

  // SVD solve returns the minimal-norm least-squares solution. JacobiSVD
  // rather than BDCSVD: the sizes are tiny and the divide-and-conquer path
  // can lose accuracy on rank-deficient stacks.
  Eigen::JacobiSVD<RealMatrix> svd(lsq,
                                   Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector coeff = svd.solve(vec_real(b));

  OracleResult out;
  out.coeff_dim = dim;
  out.a_min_fro = Matrix::Zero(n, n);
  for (Index k = 0; k < dim; ++k) {
    out.a_min_fro += coeff(k) * basis[k];
  }
  out.rho = residual(out.a_min_fro, x, b);
  return out;
}

double residual(const Matrix& a, const Matrix& x, const Matrix& b) {
  if (a.cols() != x.rows() || x.rows() != b.rows() || x.cols() != b.cols()) {
    throw std::invalid_argument("residual: shape mismatch");
  }
  return (a * x - b).norm();
}

bool spectral_floor_check(const SilspCore& core, const Matrix& a, double tol) {
  return spectral_norm(a) >= spectral_norm(core.pcol) - tol;
}

}  // namespace silsp
