#pragma once

#include "silsp/solver.hpp"
#include "silsp/structures.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>

namespace silsp {

using Json = nlohmann::json;

/// Matrix object schema:
///   {"rows": n, "cols": p, "re": [[row-major]], "im": [[row-major]]}
/// "im" is optional and defaults to zero.
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);

/// Structure spec schema:
///   {"kind": "sym"|"skew-sym"|"herm"|"skew-herm", "field": "real"|"complex"}
///   {"kind": "jordan"|"lie", "form": "bilinear"|"sesquilinear",
///    "M": <matrix>, "field": ...}
/// "field" defaults to real for sym/skew-sym, complex otherwise.
StructureClass structure_from_json(const Json& j);
std::string kind_name(AlgebraKind k);

struct ProblemFile {
  StructureClass structure;
  Matrix x;
  Matrix b;
  NormKind norm = NormKind::Frobenius;
  std::optional<Matrix> z;
  std::optional<double> rtol;
};

ProblemFile problem_from_json(const Json& j);

Json solution_to_json(const SilspSolution& sol, const StructureClass& s,
                      const Matrix& x, const Matrix& b);

}  // namespace silsp
