#pragma once

#include "silsp/numlin.hpp"

#include <optional>
#include <vector>

namespace silsp {

enum class FormKind { Bilinear, Sesquilinear };
enum class Field { Real, Complex };

/// Symmetry type of the defining matrix M of a scalar product.
enum class MSymmetry { Symmetric, SkewSymmetric, Hermitian, SkewHermitian };

/// A scalar product <x,y>_M = y^T M x (bilinear) or y^H M x (sesquilinear),
/// with M unitary and (skew-)symmetric resp. (skew-)Hermitian to match the
/// form. Construction validates both properties and records the symmetry.
class ScalarProduct {
 public:
  ScalarProduct(Matrix m, FormKind form, double tol = 1e-8);

  const Matrix& m() const { return m_; }
  FormKind form() const { return form_; }
  MSymmetry m_symmetry() const { return sym_; }
  Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
  FormKind form_;
  MSymmetry sym_;
};

/// Adjoint of A relative to sp: M^{-1} A^T M (bilinear) or M^{-1} A^H M
/// (sesquilinear). M^{-1} is taken as M^H, M being unitary.
Matrix adjoint(const Matrix& a, const ScalarProduct& sp);

enum class AlgebraKind { Jordan, Lie, Sym, SkewSym, Herm, SkewHerm };

/// Either a prototype class (sym / skew-sym / Herm / skew-Herm) or the
/// Jordan / Lie algebra of a scalar product.
struct StructureClass {
  AlgebraKind kind;
  Field field;
  std::optional<ScalarProduct> scalar_product;  // Jordan / Lie only

  static StructureClass prototype(AlgebraKind k, Field f);
  static StructureClass jordan(ScalarProduct sp, Field f);
  static StructureClass lie(ScalarProduct sp, Field f);

  bool is_prototype() const {
    return kind != AlgebraKind::Jordan && kind != AlgebraKind::Lie;
  }
};

/// +1 for Jordan-type classes (A* = A), -1 for Lie-type (A* = -A).
int class_sign(const StructureClass& s);

/// The adjoint the class is defined with: transpose (Sym/SkewSym),
/// conjugate transpose (Herm/SkewHerm), or the scalar-product adjoint.
Matrix class_adjoint(const Matrix& a, const StructureClass& s);

/// ||A* -+ A||_F, the deviation of A from membership in S.
double membership_defect(const Matrix& a, const StructureClass& s);

/// True iff membership_defect(A) <= tol * (1 + ||A||_F). Real-field classes
/// additionally require (near-)real entries.
bool is_member(const Matrix& a, const StructureClass& s, double tol = 1e-8);

/// Orthonormal basis of a prototype class as a REAL vector space under the
/// inner product re Tr(A^H B). Jordan/Lie classes are rejected; reduce them
/// to a prototype first.
std::vector<Matrix> orthonormal_basis(const StructureClass& s, Index n);

/// Nearest member of S in the Frobenius norm: (A + A*)/2 for Jordan-type,
/// (A - A*)/2 for Lie-type classes.
Matrix structured_project(const Matrix& a, const StructureClass& s);

/// Checks the block identity
///   ||A||_F = (2 ||[A11; A21]||_F^2 - ||A11||_F^2 + ||A22||_F^2)^{1/2}
/// that holds for any matrix in a prototype class, split at row/col r.
bool block_frobenius_identity_check(const Matrix& a, Index split,
                                    double tol = 1e-10);

}  // namespace silsp
