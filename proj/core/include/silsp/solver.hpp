#pragma once

#include "silsp/dkw.hpp"
#include "silsp/reduction.hpp"
#include "silsp/structures.hpp"

namespace silsp {

enum class NormKind { Frobenius, Spectral };

/// Shared intermediate data of the closed-form solver, in the coordinates of
/// the trimmed SVD X = U1 Sigma1 V1^H of X (prototype classes only).
///
/// With W1 = U1* B V1 and W2 = U2* B V1 (* the class adjoint symbol), the
/// residual-optimal diagonal block is
///   A11 = D o (W1 Sigma1 + s (W1 Sigma1)*),   s = +/-1 the class sign,
/// and the coupling block A12 = W2 Sigma1^{-1} is forced. Every minimizer
/// contains the column block [A11; A12]; only the trailing diagonal block
/// is free.
struct SilspCore {
  StructureClass proto;
  TrimmedSvd svd;
  RealMatrix d;       // D_ij = 1/(sigma_i^2 + sigma_j^2)
  Matrix a11;         // r x r, carries the prototype symmetry
  Matrix a12;         // (n-r) x r
  double rho = 0.0;   // optimal residual
  Matrix pcol;        // [A11; A12], n x r; its spectral norm is mu
};

struct SilspSolution {
  Matrix a;
  double rho = 0.0;
  NormKind norm_kind = NormKind::Frobenius;
  double sigma = 0.0;  // smallest optimal-solution norm for norm_kind
  double mu = 0.0;     // spectral bound (spectral case)
  Matrix k;            // DKW contraction factor (spectral case)
  bool unique = false;
};

/// Minimizer of |x*alpha - b1|^2 + |x*beta - b2|^2 over complex x,
/// (alpha*b1 + beta*b2) / (alpha^2 + beta^2). Requires (alpha, beta) != 0.
Complex scalar_min(double alpha, double beta, Complex b1, Complex b2);

/// Closed-form core for a prototype class (Sym, SkewSym, Herm).
SilspCore core(const StructureClass& s, const Matrix& x, const Matrix& b,
               double rtol = 0.0);

/// Optimal residual rho^S(X, B) for any supported class; Jordan/Lie classes
/// go through the prototype reduction.
double rho(const StructureClass& s, const Matrix& x, const Matrix& b,
           double rtol = 0.0);

/// A member of the full minimizer family, parametrized by Z in S:
///   A(Z) = A_min_fro + (I - X X^+)* Z (I - X X^+).
/// Z = 0 gives the minimal-Frobenius solution. With sanitize_z, Z is
/// projected onto S instead of being rejected.
Matrix solution_family(const StructureClass& s, const Matrix& x,
                       const Matrix& b, const Matrix& z, double rtol = 0.0,
                       bool sanitize_z = false);

/// The unique minimizer of smallest Frobenius norm.
SilspSolution min_frobenius(const StructureClass& s, const Matrix& x,
                            const Matrix& b, double rtol = 0.0);

/// Smallest spectral norm among minimizers: ||[A11; A12]||_2.
double sigma_spectral(const StructureClass& s, const Matrix& x,
                      const Matrix& b, double rtol = 0.0);

/// A member of the minimal-spectral-norm family, parametrized by a
/// structured contraction Z (n x n, in S, ||Z||_2 <= 1). The free trailing
/// block is completed by the norm-preserving dilation at mu = sigma_spectral.
SilspSolution min_spectral_family(const StructureClass& s, const Matrix& x,
                                  const Matrix& b, const Matrix& z,
                                  double rtol = 0.0, bool sanitize_z = false);

/// Vector fast paths (S in {SkewSym, Herm}, x != 0).
double vector_rho(const StructureClass& s, const Vector& x, const Vector& b);
SilspSolution vector_min_frobenius(const StructureClass& s, const Vector& x,
                                   const Vector& b);
/// Z is an (n-1) x (n-1) structured contraction acting in the orthogonal
/// complement of x.
SilspSolution vector_min_spectral_family(const StructureClass& s,
                                         const Vector& x, const Vector& b,
                                         const Matrix& z);

}  // namespace silsp
