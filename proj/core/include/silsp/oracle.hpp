#pragma once

#include "silsp/solver.hpp"
#include "silsp/structures.hpp"

namespace silsp {

/// Brute-force reference solver, independent of the closed forms: expand A
/// in an orthonormal real basis of S and solve the resulting ordinary
/// least-squares problem in coefficient space. The minimal-norm coefficient
/// solution corresponds to the minimal-Frobenius-norm minimizer because the
/// basis is orthonormal under re Tr(A^H B).
struct OracleResult {
  double rho = 0.0;
  Matrix a_min_fro;
  Index coeff_dim = 0;
};

/// Works for prototype classes directly and for Jordan/Lie classes via a
/// Gram-Schmidt orthonormalization of the projected elementary matrices
/// (no use of the prototype reduction). n is capped (default 12).
OracleResult oracle_solve(const StructureClass& s, const Matrix& x,
                          const Matrix& b, Index cap = 12);

/// ||A X - B||_F.
double residual(const Matrix& a, const Matrix& x, const Matrix& b);

/// True iff ||A||_2 >= ||[A11; A12]||_2 - tol: the fixed column block lower
/// bounds the spectral norm of every residual minimizer.
bool spectral_floor_check(const SilspCore& core, const Matrix& a, double tol);

}  // namespace silsp
