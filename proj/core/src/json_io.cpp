#include "silsp/json_io.hpp"

#include "silsp/oracle.hpp"
#include "silsp/reduction.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace silsp {

namespace {

RealMatrix plane_from_json(const Json& rows, Index nr, Index nc,
                           const char* what) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != nr) {
    throw std::invalid_argument(std::string("matrix object: bad ") + what);
  }
  RealMatrix m(nr, nc);
  for (Index i = 0; i < nr; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<Index>(row.size()) != nc) {
      throw std::invalid_argument(std::string("matrix object: ragged ") + what);
    }
    for (Index j = 0; j < nc; ++j) m(i, j) = row[j].get<double>();
  }
  return m;
}

}  // namespace

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("re")) {
    throw std::invalid_argument("matrix object: rows, cols and re are required");
  }
  const Index nr = j.at("rows").get<Index>();
  const Index nc = j.at("cols").get<Index>();
  if (nr < 0 || nc < 0) throw std::invalid_argument("matrix object: negative shape");

  Matrix m(nr, nc);
  m.real() = plane_from_json(j.at("re"), nr, nc, "re");
  if (j.contains("im")) {
    m.imag() = plane_from_json(j.at("im"), nr, nc, "im");
  } else {
    m.imag().setZero();
  }
  check_finite(m, "matrix object");
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json re = Json::array(), im = Json::array();
  bool has_im = false;
  for (Index i = 0; i < m.rows(); ++i) {
    Json rrow = Json::array(), irow = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      rrow.push_back(std::real(m(i, j)));
      irow.push_back(std::imag(m(i, j)));
      if (std::imag(m(i, j)) != 0.0) has_im = true;
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  Json out{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}};
  if (has_im) out["im"] = std::move(im);
  return out;
}

std::string kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Sym: return "sym";
    case AlgebraKind::SkewSym: return "skew-sym";
    case AlgebraKind::Herm: return "herm";
    case AlgebraKind::SkewHerm: return "skew-herm";
    case AlgebraKind::Jordan: return "jordan";
    case AlgebraKind::Lie: return "lie";
  }
  return "?";
}

StructureClass structure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw std::invalid_argument("structure spec: kind is required");
  }
  const std::string kind = j.at("kind").get<std::string>();

  auto field_of = [&](Field fallback) {
    if (!j.contains("field")) return fallback;
    const std::string f = j.at("field").get<std::string>();
    if (f == "real") return Field::Real;
    if (f == "complex") return Field::Complex;
    throw std::invalid_argument("structure spec: field must be real or complex");
  };

  if (kind == "sym" || kind == "skew-sym") {
    const AlgebraKind k = (kind == "sym") ? AlgebraKind::Sym : AlgebraKind::SkewSym;
    return StructureClass::prototype(k, field_of(Field::Real));
  }
  if (kind == "herm" || kind == "skew-herm") {
    const AlgebraKind k = (kind == "herm") ? AlgebraKind::Herm : AlgebraKind::SkewHerm;
    return StructureClass::prototype(k, field_of(Field::Complex));
  }
  if (kind == "jordan" || kind == "lie") {
    if (!j.contains("form") || !j.contains("M")) {
      throw std::invalid_argument("structure spec: jordan/lie need form and M");
    }
    const std::string form_s = j.at("form").get<std::string>();
    FormKind form;
    if (form_s == "bilinear") {
      form = FormKind::Bilinear;
    } else if (form_s == "sesquilinear") {
      form = FormKind::Sesquilinear;
    } else {
      throw std::invalid_argument("structure spec: bad form");
    }
    Matrix m = matrix_from_json(j.at("M"));
    const Field default_field =
        (form == FormKind::Bilinear && m.imag().norm() == 0.0) ? Field::Real
                                                               : Field::Complex;
    ScalarProduct sp(std::move(m), form);
    const Field f = field_of(default_field);
    return kind == "jordan" ? StructureClass::jordan(std::move(sp), f)
                            : StructureClass::lie(std::move(sp), f);
  }
  throw std::invalid_argument("structure spec: unknown kind '" + kind + "'");
}

ProblemFile problem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("structure") || !j.contains("X") ||
      !j.contains("B")) {
    throw std::invalid_argument("problem file: structure, X and B are required");
  }
  ProblemFile p{structure_from_json(j.at("structure")),
                matrix_from_json(j.at("X")), matrix_from_json(j.at("B"))};
  if (p.x.rows() != p.b.rows() || p.x.cols() != p.b.cols()) {
    throw std::invalid_argument("problem file: X and B shapes disagree");
  }
  if (j.contains("norm")) {
    const std::string n = j.at("norm").get<std::string>();
    if (n == "fro") {
      p.norm = NormKind::Frobenius;
    } else if (n == "spec") {
      p.norm = NormKind::Spectral;
    } else {
      throw std::invalid_argument("problem file: norm must be fro or spec");
    }
  }
  if (j.contains("Z")) p.z = matrix_from_json(j.at("Z"));
  if (j.contains("rtol")) {
    p.rtol = j.at("rtol").get<double>();
    if (*p.rtol < 0) throw std::invalid_argument("problem file: rtol must be >= 0");
  }
  return p;
}

Json solution_to_json(const SilspSolution& sol, const StructureClass& s,
                      const Matrix& x, const Matrix& b) {
  Json out;
  out["rho"] = sol.rho;
  out["sigma"] = sol.sigma;
  out["A"] = matrix_to_json(sol.a);
  out["unique"] = sol.unique;
  if (sol.norm_kind == NormKind::Spectral) out["mu"] = sol.mu;
  out["class_resolved"] = kind_name(to_prototype(s, x, b).proto.kind);
  out["residual_check"] = residual(sol.a, x, b);
  return out;
}

}  // namespace silsp
