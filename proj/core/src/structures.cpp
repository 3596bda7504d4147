#include "silsp/structures.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace silsp {

namespace {

bool nearly_real(const Matrix& a, double tol) {
  return a.imag().norm() <= tol * (1.0 + a.norm());
}

}  // namespace

ScalarProduct::ScalarProduct(Matrix m, FormKind form, double tol)
    : m_(std::move(m)), form_(form) {
  check_finite(m_, "ScalarProduct");
  const Index n = m_.rows();
  if (n != m_.cols()) throw std::invalid_argument("ScalarProduct: M must be square");
  if (n == 0) throw std::invalid_argument("ScalarProduct: M must be nonempty");
  if ((m_.adjoint() * m_ - Matrix::Identity(n, n)).norm() > tol * n) {
    throw std::invalid_argument("ScalarProduct: M must be unitary");
  }
  const double thresh = tol * m_.norm();
  if (form_ == FormKind::Bilinear) {
    if ((m_.transpose() - m_).norm() <= thresh) {
      sym_ = MSymmetry::Symmetric;
    } else if ((m_.transpose() + m_).norm() <= thresh) {
      sym_ = MSymmetry::SkewSymmetric;
    } else {
      throw std::invalid_argument(
          "ScalarProduct: bilinear form requires symmetric or skew-symmetric M");
    }
  } else {
    if ((m_.adjoint() - m_).norm() <= thresh) {
      sym_ = MSymmetry::Hermitian;
    } else if ((m_.adjoint() + m_).norm() <= thresh) {
      sym_ = MSymmetry::SkewHermitian;
    } else {
      throw std::invalid_argument(
          "ScalarProduct: sesquilinear form requires Hermitian or skew-Hermitian M");
    }
  }
}

Matrix adjoint(const Matrix& a, const ScalarProduct& sp) {
  if (a.rows() != a.cols() || a.rows() != sp.dim()) {
    throw std::invalid_argument("adjoint: dimension mismatch");
  }
  if (sp.form() == FormKind::Bilinear) {
    return sp.m().adjoint() * a.transpose() * sp.m();
  }
  return sp.m().adjoint() * a.adjoint() * sp.m();
}

StructureClass StructureClass::prototype(AlgebraKind k, Field f) {
  if (k == AlgebraKind::Jordan || k == AlgebraKind::Lie) {
    throw std::invalid_argument("prototype: Jordan/Lie need a scalar product");
  }
  if ((k == AlgebraKind::Herm || k == AlgebraKind::SkewHerm) && f == Field::Real) {
    throw std::invalid_argument(
        "prototype: Hermitian classes are defined over the complex field");
  }
  return StructureClass{k, f, std::nullopt};
}

namespace {

StructureClass make_algebra(AlgebraKind k, ScalarProduct sp, Field f) {
  if (f == Field::Real) {
    if (sp.form() == FormKind::Sesquilinear) {
      throw std::invalid_argument(
          "StructureClass: sesquilinear forms require the complex field");
    }
    if (!nearly_real(sp.m(), 1e-12)) {
      throw std::invalid_argument("StructureClass: real field requires real M");
    }
  }
  return StructureClass{k, f, std::move(sp)};
}

}  // namespace

StructureClass StructureClass::jordan(ScalarProduct sp, Field f) {
  return make_algebra(AlgebraKind::Jordan, std::move(sp), f);
}

StructureClass StructureClass::lie(ScalarProduct sp, Field f) {
  return make_algebra(AlgebraKind::Lie, std::move(sp), f);
}

int class_sign(const StructureClass& s) {
  switch (s.kind) {
    case AlgebraKind::Jordan:
    case AlgebraKind::Sym:
    case AlgebraKind::Herm:
      return 1;
    default:
      return -1;
  }
}

Matrix class_adjoint(const Matrix& a, const StructureClass& s) {
  switch (s.kind) {
    case AlgebraKind::Sym:
    case AlgebraKind::SkewSym:
      return a.transpose();
    case AlgebraKind::Herm:
    case AlgebraKind::SkewHerm:
      return a.adjoint();
    default:
      return adjoint(a, *s.scalar_product);
  }
}

double membership_defect(const Matrix& a, const StructureClass& s) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("membership_defect: square matrix required");
  }
  const double sign = static_cast<double>(class_sign(s));
  return (class_adjoint(a, s) - sign * a).norm();
}

bool is_member(const Matrix& a, const StructureClass& s, double tol) {
  const double scale = 1.0 + a.norm();
  if (s.field == Field::Real && !nearly_real(a, tol)) return false;
  return membership_defect(a, s) <= tol * scale;
}

std::vector<Matrix> orthonormal_basis(const StructureClass& s, Index n) {
  if (!s.is_prototype()) {
    throw std::invalid_argument(
        "orthonormal_basis: reduce Jordan/Lie classes to a prototype first");
  }
  if (n < 1) throw std::invalid_argument("orthonormal_basis: n must be >= 1");

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex iu(0.0, 1.0);
  std::vector<Matrix> basis;

  auto unit = [n](Index i, Index j) {
    Matrix e = Matrix::Zero(n, n);
    e(i, j) = 1.0;
    return e;
  };

  switch (s.kind) {
    case AlgebraKind::Sym: {
      for (Index i = 0; i < n; ++i) basis.push_back(unit(i, i));
      for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
          basis.push_back(inv_sqrt2 * (unit(i, j) + unit(j, i)));
      if (s.field == Field::Complex) {
        const Index real_dim = basis.size();
        for (Index k = 0; k < real_dim; ++k) basis.push_back(iu * basis[k]);
      }
      break;
    }
    case AlgebraKind::SkewSym: {
      for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
          basis.push_back(inv_sqrt2 * (unit(i, j) - unit(j, i)));
      if (s.field == Field::Complex) {
        const Index real_dim = basis.size();
        for (Index k = 0; k < real_dim; ++k) basis.push_back(iu * basis[k]);
      }
      break;
    }
    case AlgebraKind::Herm: {
      for (Index i = 0; i < n; ++i) basis.push_back(unit(i, i));
      for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
          basis.push_back(inv_sqrt2 * (unit(i, j) + unit(j, i)));
          basis.push_back(inv_sqrt2 * (iu * unit(i, j) - iu * unit(j, i)));
        }
      break;
    }
    case AlgebraKind::SkewHerm: {
      StructureClass herm = StructureClass::prototype(AlgebraKind::Herm, Field::Complex);
      for (const Matrix& e : orthonormal_basis(herm, n)) basis.push_back(iu * e);
      break;
    }
    default:
      break;  // unreachable, guarded above
  }
  return basis;
}

Matrix structured_project(const Matrix& a, const StructureClass& s) {
  const double sign = static_cast<double>(class_sign(s));
  Matrix p = 0.5 * (a + sign * class_adjoint(a, s));
  if (s.field == Field::Real) p = p.real().cast<Complex>();
  return p;
}

bool block_frobenius_identity_check(const Matrix& a, Index split, double tol) {
  const Index n = a.rows();
  if (a.cols() != n || split < 0 || split > n) {
    throw std::invalid_argument("block_frobenius_identity_check: bad split");
  }
  const double col2 = a.topLeftCorner(n, split).squaredNorm();
  const double a11_2 = a.topLeftCorner(split, split).squaredNorm();
  const double a22_2 = a.bottomRightCorner(n - split, n - split).squaredNorm();
  const double lhs = a.norm();
  const double rhs = std::sqrt(2.0 * col2 - a11_2 + a22_2);
  return std::abs(lhs - rhs) <= tol * (1.0 + lhs);
}

}  // namespace silsp
