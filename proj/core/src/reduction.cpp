#include "silsp/reduction.hpp"

#include <stdexcept>

namespace silsp {

namespace {

// Prototype class of M*S for S the Jordan or Lie algebra of the scalar
// product. Writing G = M A, membership A* = +/-A turns into
//   bilinear:      eps * G^T = +/-G   (M^T = eps M)
//   sesquilinear:  eta * G^H = +/-G   (M^H = eta M)
AlgebraKind dispatch(AlgebraKind kind, const ScalarProduct& sp) {
  const bool jordan = (kind == AlgebraKind::Jordan);
  switch (sp.m_symmetry()) {
    case MSymmetry::Symmetric:
      return jordan ? AlgebraKind::Sym : AlgebraKind::SkewSym;
    case MSymmetry::SkewSymmetric:
      return jordan ? AlgebraKind::SkewSym : AlgebraKind::Sym;
    case MSymmetry::Hermitian:
      return jordan ? AlgebraKind::Herm : AlgebraKind::SkewHerm;
    case MSymmetry::SkewHermitian:
      return jordan ? AlgebraKind::SkewHerm : AlgebraKind::Herm;
  }
  throw std::logic_error("dispatch: unreachable");
}

}  // namespace

ReducedProblem to_prototype(const StructureClass& s, const Matrix& x,
                            const Matrix& b) {
  check_finite(x, "to_prototype X");
  check_finite(b, "to_prototype B");
  if (x.rows() != b.rows() || x.cols() != b.cols()) {
    throw std::invalid_argument("to_prototype: X and B must have equal shape");
  }

  ReducedProblem rp;
  rp.original = s;
  rp.x = x;
  rp.back_scalar = Complex(1.0, 0.0);
  const Index n = x.rows();

  AlgebraKind proto_kind;
  Field proto_field = s.field;
  if (s.is_prototype()) {
    proto_kind = s.kind;
    rp.b_reduced = b;
    rp.back_multiplier = Matrix::Identity(n, n);
  } else {
    const ScalarProduct& sp = *s.scalar_product;
    if (sp.dim() != n) {
      throw std::invalid_argument("to_prototype: M and X dimension mismatch");
    }
    proto_kind = dispatch(s.kind, sp);
    if (sp.form() == FormKind::Sesquilinear) proto_field = Field::Complex;
    rp.b_reduced = sp.m() * b;
    rp.back_multiplier = sp.m().adjoint();
  }

  // Skew-Hermitian prototypes rotate to Hermitian: G solves the skew-Herm
  // problem for B iff -iG solves the Hermitian problem for iB.
  if (proto_kind == AlgebraKind::SkewHerm) {
    proto_kind = AlgebraKind::Herm;
    rp.b_reduced = Complex(0.0, 1.0) * rp.b_reduced;
    rp.back_scalar = Complex(0.0, -1.0);
  }

  if ((proto_kind == AlgebraKind::Herm) && proto_field == Field::Real) {
    throw std::invalid_argument(
        "to_prototype: Hermitian prototype requires the complex field");
  }
  rp.proto = StructureClass::prototype(proto_kind, proto_field);
  return rp;
}

Matrix from_prototype(const ReducedProblem& rp, const Matrix& g) {
  if (g.rows() != rp.back_multiplier.cols() || g.cols() != g.rows()) {
    throw std::invalid_argument("from_prototype: shape mismatch");
  }
  Matrix a = rp.back_scalar * (rp.back_multiplier * g);
  if (rp.original.field == Field::Real) a = a.real().cast<Complex>();
  return a;
}

}  // namespace silsp
