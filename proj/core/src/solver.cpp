#include "silsp/solver.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace silsp {

namespace {

bool uses_conjugation(const StructureClass& proto) {
  return proto.kind == AlgebraKind::Herm;
}

// The adjoint symbol of the prototype: transpose for sym/skew-sym,
// conjugate transpose for Herm.
Matrix star(const Matrix& m, const StructureClass& proto) {
  return uses_conjugation(proto) ? Matrix(m.adjoint()) : Matrix(m.transpose());
}

void require_proto(const StructureClass& s, const char* who) {
  if (s.kind != AlgebraKind::Sym && s.kind != AlgebraKind::SkewSym &&
      s.kind != AlgebraKind::Herm) {
    throw std::invalid_argument(std::string(who) +
                                ": expected a sym/skew-sym/Herm prototype");
  }
}

void realify(Matrix& a, const StructureClass& s) {
  if (s.field != Field::Real) return;
  if (a.imag().norm() <= 1e-10 * (1.0 + a.norm())) {
    a = a.real().cast<Complex>();
  }
}

// Assembles A from its blocks in the SVD coordinates:
//   A = UL [A11  s A12*; A12  A22] U^H,
// UL = conj(U) for sym/skew-sym, U for Herm.
Matrix assemble(const SilspCore& c, const Matrix& a22) {
  const Index r = c.svd.rank();
  const Index n = c.svd.U1.rows();
  const double sign = static_cast<double>(class_sign(c.proto));

  Matrix blocks(n, n);
  blocks.topLeftCorner(r, r) = c.a11;
  blocks.topRightCorner(r, n - r) = sign * star(c.a12, c.proto);
  blocks.bottomLeftCorner(n - r, r) = c.a12;
  blocks.bottomRightCorner(n - r, n - r) = a22;

  Matrix u(n, n);
  u << c.svd.U1, c.svd.U2;
  const Matrix ul = uses_conjugation(c.proto) ? u : Matrix(u.conjugate());
  return ul * blocks * u.adjoint();
}

Matrix validate_z(const Matrix& z, const StructureClass& s, Index n,
                  bool sanitize, bool contraction) {
  if (z.rows() != n || z.cols() != n) {
    throw std::invalid_argument("Z shape mismatch");
  }
  check_finite(z, "Z");
  Matrix zc = z;
  if (sanitize) {
    zc = structured_project(zc, s);
  } else if (!is_member(zc, s)) {
    throw std::domain_error("Z does not belong to the structure class");
  }
  if (contraction) {
    const double zn = spectral_norm(zc);
    if (zn > 1.0 + 1e-10 && !sanitize) {
      throw std::domain_error("Z is not a contraction");
    }
    if (zn > 1.0) zc /= zn;
  }
  return zc;
}

// Maps a family parameter in the original class to the prototype class:
// G = conj(scalar) * M * A inverts A = scalar * M^H * G.
Matrix z_to_prototype(const ReducedProblem& rp, const Matrix& z) {
  if (rp.original.is_prototype() && rp.original.kind == rp.proto.kind) return z;
  return std::conj(rp.back_scalar) * (rp.back_multiplier.adjoint() * z);
}

}  // namespace

Complex scalar_min(double alpha, double beta, Complex b1, Complex b2) {
  const double denom = alpha * alpha + beta * beta;
  if (denom == 0.0) {
    throw std::invalid_argument("scalar_min: alpha and beta both zero");
  }
  return (alpha * b1 + beta * b2) / denom;
}

SilspCore core(const StructureClass& s, const Matrix& x, const Matrix& b,
               double rtol) {
  require_proto(s, "core");
  check_finite(x, "core X");
  check_finite(b, "core B");
  if (x.rows() != b.rows() || x.cols() != b.cols()) {
    throw std::invalid_argument("core: X and B must have equal shape");
  }
  if (s.field == Field::Real &&
      (x.imag().norm() > 1e-12 * (1 + x.norm()) ||
       b.imag().norm() > 1e-12 * (1 + b.norm()))) {
    throw std::invalid_argument("core: real-field class requires real X, B");
  }

  SilspCore c;
  c.proto = s;
  c.svd = trimmed_svd(x, rtol);
  const Index r = c.svd.rank();
  const double sign = static_cast<double>(class_sign(s));

  const Matrix w1 = star(c.svd.U1, s) * b * c.svd.V1;
  const Matrix w2 = star(c.svd.U2, s) * b * c.svd.V1;
  const double tail2 = (b * c.svd.V2).squaredNorm();

  c.d = coeff_matrix(c.svd.sigma);
  // A11 = D o (P + s P*), P = W1 Sigma1; adding P to its own (conjugate)
  // transpose keeps the skew diagonal exactly zero and the Hermitian
  // diagonal exactly real.
  const Matrix p = w1 * c.svd.sigma.asDiagonal().toDenseMatrix().cast<Complex>();
  c.a11 = hadamard(c.d.cast<Complex>(), p + sign * star(p, s));
  c.a12 = w2 * c.svd.sigma.cwiseInverse().asDiagonal().toDenseMatrix().cast<Complex>();
  c.rho = std::sqrt(
      (c.a11 * c.svd.sigma.asDiagonal().toDenseMatrix().cast<Complex>() - w1)
          .squaredNorm() +
      tail2);

  c.pcol.resize(c.svd.U1.rows(), r);
  c.pcol << c.a11, c.a12;
  return c;
}

double rho(const StructureClass& s, const Matrix& x, const Matrix& b,
           double rtol) {
  const ReducedProblem rp = to_prototype(s, x, b);
  return core(rp.proto, rp.x, rp.b_reduced, rtol).rho;
}

Matrix solution_family(const StructureClass& s, const Matrix& x,
                       const Matrix& b, const Matrix& z, double rtol,
                       bool sanitize_z) {
  const ReducedProblem rp = to_prototype(s, x, b);
  const Matrix zc = validate_z(z, s, x.rows(), sanitize_z, /*contraction=*/false);
  const Matrix zp = z_to_prototype(rp, zc);

  const SilspCore c = core(rp.proto, rp.x, rp.b_reduced, rtol);
  const Matrix compressed = star(c.svd.U2, rp.proto) * zp * c.svd.U2;
  Matrix g = assemble(c, compressed);
  Matrix a = from_prototype(rp, g);
  realify(a, s);
  return a;
}

SilspSolution min_frobenius(const StructureClass& s, const Matrix& x,
                            const Matrix& b, double rtol) {
  const ReducedProblem rp = to_prototype(s, x, b);
  const SilspCore c = core(rp.proto, rp.x, rp.b_reduced, rtol);
  const Index free_dim = c.svd.U2.cols();

  SilspSolution sol;
  sol.norm_kind = NormKind::Frobenius;
  sol.rho = c.rho;
  sol.sigma = std::sqrt(c.a11.squaredNorm() + 2.0 * c.a12.squaredNorm());
  sol.a = from_prototype(rp, assemble(c, Matrix::Zero(free_dim, free_dim)));
  sol.unique = true;
  realify(sol.a, s);
  return sol;
}

double sigma_spectral(const StructureClass& s, const Matrix& x,
                      const Matrix& b, double rtol) {
  const ReducedProblem rp = to_prototype(s, x, b);
  return spectral_norm(core(rp.proto, rp.x, rp.b_reduced, rtol).pcol);
}

namespace {

// Shared by the matrix and vector spectral paths: completes the free block
// at mu = ||[A11; A12]||_2 with the norm-preserving dilation and assembles
// the solution. z_slot is the (n-r) x (n-r) contraction in SVD coordinates.
SilspSolution spectral_from_core(const SilspCore& c, const Matrix& z_slot,
                                 double rho_value) {
  const double sign = static_cast<double>(class_sign(c.proto));
  const double mu = spectral_norm(c.pcol);
  const Index r = c.svd.rank();
  const Index free_dim = c.svd.U2.cols();
  const Matrix a12_star = sign * star(c.a12, c.proto);

  const Matrix a22 = dilation(c.a11, c.a12, a12_star, mu, z_slot);

  SilspSolution sol;
  sol.norm_kind = NormKind::Spectral;
  sol.rho = rho_value;
  sol.mu = mu;
  sol.sigma = mu;
  sol.a = assemble(c, a22);

  if (free_dim == 0 || mu == 0.0) {
    sol.k.resize(free_dim, r);
    sol.k.setZero();
    sol.unique = true;
    return sol;
  }

  // The free block is mu * P Z Q plus a forced term, with P, Q the two
  // slack factors of the dilation. The family is a single point exactly
  // when W -> P W Q vanishes on the structured slot space; probe it with
  // deterministic structured directions (zero on random directions implies
  // zero on the whole space up to a null set).
  const double tau = 1e-12 * std::max(mu * mu, 1.0);
  const Matrix eye_r = Matrix::Identity(r, r);
  const Matrix k =
      c.a12 * psd_pinv_sqrt(mu * mu * eye_r - c.a11.adjoint() * c.a11, tau);
  const Matrix l =
      psd_pinv_sqrt(mu * mu * eye_r - c.a11 * c.a11.adjoint(), tau) * a12_star;
  const Matrix eye_f = Matrix::Identity(free_dim, free_dim);
  const Matrix left = psd_sqrt(eye_f - k * k.adjoint(), 1e-8);
  const Matrix right = psd_sqrt(eye_f - l.adjoint() * l, 1e-8);
  sol.k = k;

  std::mt19937_64 gen(0x5115bULL);
  std::normal_distribution<double> dist(0.0, 1.0);
  double response = 0.0;
  for (int probe = 0; probe < 3; ++probe) {
    Matrix w(free_dim, free_dim);
    for (Index i = 0; i < free_dim; ++i) {
      for (Index j = 0; j < free_dim; ++j) {
        const double im =
            (c.proto.field == Field::Complex) ? dist(gen) : 0.0;
        w(i, j) = Complex(dist(gen), im);
      }
    }
    w = structured_project(w, c.proto);
    const double wn = w.norm();
    if (wn == 0.0) continue;
    response = std::max(response, (left * w * right).norm() / wn);
  }
  // psd_sqrt turns eigenvalue noise of order eps into sqrt(eps) ~ 1e-8;
  // a genuinely free block responds at order 1
  sol.unique =
      response <= 1e-6 * (1.0 + spectral_norm(left) * spectral_norm(right));
  return sol;
}

}  // namespace

SilspSolution min_spectral_family(const StructureClass& s, const Matrix& x,
                                  const Matrix& b, const Matrix& z,
                                  double rtol, bool sanitize_z) {
  const ReducedProblem rp = to_prototype(s, x, b);
  const Matrix zc = validate_z(z, s, x.rows(), sanitize_z, /*contraction=*/true);
  const Matrix zp = z_to_prototype(rp, zc);

  const SilspCore c = core(rp.proto, rp.x, rp.b_reduced, rtol);
  const Matrix z_slot = star(c.svd.U2, rp.proto) * zp * c.svd.U2;

  SilspSolution sol = spectral_from_core(c, z_slot, c.rho);
  sol.a = from_prototype(rp, sol.a);
  realify(sol.a, s);
  return sol;
}

namespace {

void require_vector_class(const StructureClass& s, const char* who) {
  if (s.kind != AlgebraKind::SkewSym && s.kind != AlgebraKind::Herm) {
    throw std::invalid_argument(std::string(who) +
                                ": vector fast path covers SkewSym and Herm only");
  }
}

void require_nonzero(const Vector& x, const char* who) {
  if (x.norm() == 0.0) {
    throw std::domain_error(std::string(who) + ": x must be nonzero");
  }
}

}  // namespace

double vector_rho(const StructureClass& s, const Vector& x, const Vector& b) {
  require_vector_class(s, "vector_rho");
  require_nonzero(x, "vector_rho");
  if (x.size() != b.size()) throw std::invalid_argument("vector_rho: size mismatch");
  if (s.kind == AlgebraKind::SkewSym) {
    const Complex xtb = (x.transpose() * b).value();
    return std::abs(xtb) / x.norm();
  }
  return std::abs(std::imag(x.dot(b))) / x.norm();
}

SilspSolution vector_min_frobenius(const StructureClass& s, const Vector& x,
                                   const Vector& b) {
  require_vector_class(s, "vector_min_frobenius");
  require_nonzero(x, "vector_min_frobenius");
  if (x.size() != b.size()) {
    throw std::invalid_argument("vector_min_frobenius: size mismatch");
  }
  const Index n = x.size();
  const double nx2 = x.squaredNorm();
  const Matrix px = Matrix::Identity(n, n) - (x * x.adjoint()) / nx2;

  SilspSolution sol;
  sol.norm_kind = NormKind::Frobenius;
  sol.rho = vector_rho(s, x, b);
  sol.unique = true;

  if (s.kind == AlgebraKind::SkewSym) {
    sol.a = (px.transpose() * b * x.conjugate().transpose() -
             x.conjugate() * b.transpose() * px) /
            nx2;
  } else {
    const double re_xb = std::real(x.dot(b));  // x.dot(b) = x^H b
    sol.a = (re_xb / (nx2 * nx2)) * (x * x.adjoint()) +
            (x * b.adjoint() * px + px * b * x.adjoint()) / nx2;
  }
  realify(sol.a, s);
  sol.sigma = sol.a.norm();
  return sol;
}

SilspSolution vector_min_spectral_family(const StructureClass& s,
                                         const Vector& x, const Vector& b,
                                         const Matrix& z) {
  require_vector_class(s, "vector_min_spectral_family");
  require_nonzero(x, "vector_min_spectral_family");
  if (x.size() != b.size()) {
    throw std::invalid_argument("vector_min_spectral_family: size mismatch");
  }
  const Index n = x.size();
  if (z.rows() != n - 1 || z.cols() != n - 1) {
    throw std::invalid_argument(
        "vector_min_spectral_family: Z must be (n-1) x (n-1)");
  }
  Matrix zc = z;
  if (n > 1) {
    if (!is_member(zc, StructureClass::prototype(s.kind, s.field)) ||
        spectral_norm(zc) > 1.0 + 1e-10) {
      throw std::domain_error(
          "vector_min_spectral_family: Z must be a structured contraction");
    }
    const double zn = spectral_norm(zc);
    if (zn > 1.0) zc /= zn;
  }

  const SilspCore c = core(s, x, b);
  SilspSolution sol = spectral_from_core(c, zc, vector_rho(s, x, b));
  realify(sol.a, s);
  return sol;
}

}  // namespace silsp
