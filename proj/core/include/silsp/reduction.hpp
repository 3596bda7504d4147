#pragma once

#include "silsp/structures.hpp"

namespace silsp {

/// A general Jordan/Lie problem min ||A X - B||_F over S rewritten as a
/// prototype problem min ||G X - B_reduced||_F over one of sym / skew-sym /
/// Herm. Solutions map back as A = back_scalar * M^H * G; the map is an
/// isometry for both norms, so optimal solutions map to optimal solutions.
struct ReducedProblem {
  StructureClass original;
  StructureClass proto;  // Sym, SkewSym, or Herm (skew-Herm is rotated away)
  Matrix x;
  Matrix b_reduced;
  Matrix back_multiplier;  // M^H; identity for prototype inputs
  Complex back_scalar;     // 1, or -i when a skew-Hermitian rotation occurred
};

ReducedProblem to_prototype(const StructureClass& s, const Matrix& x,
                            const Matrix& b);

/// Maps a prototype solution (or family member) back to the original class.
Matrix from_prototype(const ReducedProblem& rp, const Matrix& g);

}  // namespace silsp
