#include "silsp/dkw.hpp"

#include <stdexcept>

namespace silsp {

namespace {

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

Matrix stack_cols(const Matrix& left, const Matrix& right) {
  Matrix out(left.rows(), left.cols() + right.cols());
  out << left, right;
  return out;
}

}  // namespace

double min_dilation_mu(const Matrix& a, const Matrix& b, const Matrix& c) {
  if (b.cols() != a.cols() || c.rows() != a.rows()) {
    throw std::invalid_argument("min_dilation_mu: shape mismatch");
  }
  return std::max(spectral_norm(stack_rows(a, b)),
                  spectral_norm(stack_cols(a, c)));
}

Matrix dilation(const Matrix& a, const Matrix& b, const Matrix& c, double mu,
                const Matrix& z) {
  const double mu_min = min_dilation_mu(a, b, c);
  if (mu <= 0.0 && mu_min > 0.0) {
    throw std::invalid_argument("dilation: mu must be positive");
  }
  if (mu < mu_min * (1.0 - 1e-9)) {
    throw std::invalid_argument("dilation: infeasible mu (below the block bound)");
  }
  if (z.rows() != b.rows() || z.cols() != c.cols()) {
    throw std::invalid_argument("dilation: Z shape mismatch");
  }

  Matrix zc = z;
  const double zn = spectral_norm(zc);
  if (zn > 1.0 + 1e-10) {
    throw std::invalid_argument("dilation: Z is not a contraction");
  }
  if (zn > 1.0) zc /= zn;

  const double tau = 1e-12 * std::max(mu * mu, 1.0);
  const Index q = a.cols(), p = a.rows();
  const Matrix inv_sqrt_col =
      psd_pinv_sqrt(mu * mu * Matrix::Identity(q, q) - a.adjoint() * a, tau);
  const Matrix inv_sqrt_row =
      psd_pinv_sqrt(mu * mu * Matrix::Identity(p, p) - a * a.adjoint(), tau);

  const Matrix k = b * inv_sqrt_col;   // rows(B) x q
  const Matrix l = inv_sqrt_row * c;   // p x cols(C)

  const Matrix left =
      psd_sqrt(Matrix::Identity(k.rows(), k.rows()) - k * k.adjoint(), 1e-8);
  const Matrix right =
      psd_sqrt(Matrix::Identity(l.cols(), l.cols()) - l.adjoint() * l, 1e-8);

  return -k * a.adjoint() * l + mu * left * zc * right;
}

}  // namespace silsp
