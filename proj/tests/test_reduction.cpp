#include "silsp/reduction.hpp"
#include "silsp/oracle.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace silsp;
using testing::Rng;

namespace {

Matrix j_matrix(Index half) {
  const Index n = 2 * half;
  Matrix j = Matrix::Zero(n, n);
  j.topRightCorner(half, half) = Matrix::Identity(half, half);
  j.bottomLeftCorner(half, half) = -Matrix::Identity(half, half);
  return j;
}

}  // namespace

TEST_CASE("to_prototype: prototype pass-through") {
  Rng rng(10);
  const Matrix x = testing::random_matrix(rng, 3, 2, false);
  const Matrix b = testing::random_matrix(rng, 3, 2, false);
  const auto sym = StructureClass::prototype(AlgebraKind::Sym, Field::Real);
  const ReducedProblem rp = to_prototype(sym, x, b);
  CHECK(rp.proto.kind == AlgebraKind::Sym);
  CHECK((rp.b_reduced - b).norm() == 0.0);
  CHECK(rp.back_scalar == Complex(1.0));

  const Matrix g = testing::random_structured(rng, sym, 3);
  CHECK((from_prototype(rp, g) - g).norm() == 0.0);
}

TEST_CASE("to_prototype: skew-Hermitian rotates to Hermitian") {
  Rng rng(11);
  const Matrix x = testing::random_matrix(rng, 3, 2, true);
  const Matrix b = testing::random_matrix(rng, 3, 2, true);
  const auto skh = StructureClass::prototype(AlgebraKind::SkewHerm, Field::Complex);
  const ReducedProblem rp = to_prototype(skh, x, b);
  CHECK(rp.proto.kind == AlgebraKind::Herm);
  CHECK((rp.b_reduced - Complex(0, 1) * b).norm() <= 1e-15 * b.norm());

  const auto herm = StructureClass::prototype(AlgebraKind::Herm, Field::Complex);
  const Matrix g = testing::random_structured(rng, herm, 3);
  const Matrix a = from_prototype(rp, g);
  CHECK((a + Complex(0, 1) * g).norm() <= 1e-14 * g.norm());  // A = -iG
  CHECK(is_member(a, skh, 1e-12));
}

TEST_CASE("to_prototype: Jordan of M = I sesquilinear is Hermitian") {
  Rng rng(12);
  const Matrix x = testing::random_matrix(rng, 3, 2, true);
  const Matrix b = testing::random_matrix(rng, 3, 2, true);
  const auto s = StructureClass::jordan(
      ScalarProduct(Matrix::Identity(3, 3), FormKind::Sesquilinear), Field::Complex);
  const ReducedProblem rp = to_prototype(s, x, b);
  CHECK(rp.proto.kind == AlgebraKind::Herm);
  CHECK((rp.b_reduced - b).norm() == 0.0);
}

TEST_CASE("to_prototype: 8-way dispatch maps members to prototype members") {
  Rng rng(13);
  const Index n = 4;
  struct Case {
    Matrix m;
    FormKind form;
    Field field;
  };
  std::vector<Case> cases = {
      {Matrix::Identity(n, n), FormKind::Bilinear, Field::Real},
      {j_matrix(n / 2), FormKind::Bilinear, Field::Real},
      {testing::random_unitary_hermitian(rng, n, false), FormKind::Bilinear,
       Field::Real},
      {Matrix::Identity(n, n), FormKind::Sesquilinear, Field::Complex},
      {testing::random_unitary_hermitian(rng, n, true), FormKind::Sesquilinear,
       Field::Complex},
      {Complex(0, 1) * Matrix::Identity(n, n), FormKind::Sesquilinear,
       Field::Complex},
      {j_matrix(n / 2), FormKind::Bilinear, Field::Complex},
      {j_matrix(n / 2), FormKind::Sesquilinear, Field::Complex},
  };
  for (const auto& c : cases) {
    for (const bool jordan : {true, false}) {
      ScalarProduct sp(c.m, c.form);
      const StructureClass s = jordan ? StructureClass::jordan(sp, c.field)
                                      : StructureClass::lie(sp, c.field);
      const Matrix x = testing::random_matrix(rng, n, 3, c.field == Field::Complex);
      const Matrix b = testing::random_matrix(rng, n, 3, c.field == Field::Complex);
      const ReducedProblem rp = to_prototype(s, x, b);

      // a random member of S must land in the prototype class (after the
      // same rotation the B side gets)
      const Matrix a = structured_project(
          testing::random_matrix(rng, n, n, c.field == Field::Complex), s);
      REQUIRE(is_member(a, s, 1e-10));
      const Matrix g = std::conj(rp.back_scalar) * (rp.back_multiplier.adjoint() * a);
      CHECK(is_member(g, rp.proto, 1e-10));

      // and back again
      CHECK((from_prototype(rp, g) - a).norm() <= 1e-12 * (1 + a.norm()));
    }
  }
}

TEST_CASE("reduction: residual and norms preserved by the back map") {
  Rng rng(14);
  const Index n = 4, p = 3;
  const auto sp = ScalarProduct(j_matrix(2), FormKind::Bilinear);
  for (const bool jordan : {true, false}) {
    const StructureClass s = jordan ? StructureClass::jordan(sp, Field::Real)
                                    : StructureClass::lie(sp, Field::Real);
    const Matrix x = testing::random_matrix(rng, n, p, false);
    const Matrix b = testing::random_matrix(rng, n, p, false);
    const ReducedProblem rp = to_prototype(s, x, b);

    const Matrix g = testing::random_structured(rng, rp.proto, n);
    const Matrix a = from_prototype(rp, g);
    CHECK(is_member(a, s, 1e-10));
    const double res_orig = residual(a, x, b);
    const double res_proto = residual(g, rp.x, rp.b_reduced);
    CHECK(std::abs(res_orig - res_proto) <= 1e-12 * (1 + res_proto));
    CHECK(std::abs(frobenius_norm(a) - frobenius_norm(g)) <= 1e-12 * (1 + g.norm()));
    CHECK(std::abs(spectral_norm(a) - spectral_norm(g)) <=
          1e-11 * (1 + spectral_norm(g)));
  }
}

TEST_CASE("reduction: round trip against the oracle") {
  Rng rng(15);
  const Index n = 4, p = 2;
  const auto sp = ScalarProduct(testing::random_unitary_hermitian(rng, n, true),
                                FormKind::Sesquilinear);
  const StructureClass s = StructureClass::lie(sp, Field::Complex);
  const Matrix x = testing::random_matrix(rng, n, p, true);
  const Matrix b = testing::random_matrix(rng, n, p, true);

  const ReducedProblem rp = to_prototype(s, x, b);
  const OracleResult direct = oracle_solve(s, x, b);
  const OracleResult reduced = oracle_solve(rp.proto, rp.x, rp.b_reduced);
  const Matrix mapped = from_prototype(rp, reduced.a_min_fro);
  CHECK(is_member(mapped, s, 1e-8));
  CHECK(std::abs(residual(mapped, x, b) - direct.rho) <= 1e-10 * (1 + b.norm()));
}

TEST_CASE("to_prototype: rejects shape mismatch and bad fields") {
  const auto herm = StructureClass::prototype(AlgebraKind::Herm, Field::Complex);
  CHECK_THROWS_AS(to_prototype(herm, Matrix::Zero(2, 2), Matrix::Zero(3, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      StructureClass::prototype(AlgebraKind::Herm, Field::Real),
      std::invalid_argument);
}
