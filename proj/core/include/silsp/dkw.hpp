#pragma once

#include "silsp/numlin.hpp"

namespace silsp {

/// Smallest mu for which the dilation [A C; B D] can be completed without
/// exceeding spectral norm mu: max(||[A; B]||_2, ||[A C]||_2).
double min_dilation_mu(const Matrix& a, const Matrix& b, const Matrix& c);

/// Norm-preserving dilation: for feasible mu and a contraction Z, returns D
/// with ||[A C; B D]||_2 <= mu,
///   D = -K A^H L + mu (I - K K^H)^{1/2} Z (I - L^H L)^{1/2},
///   K = B (mu^2 I - A^H A)^{-1/2},  L = (mu^2 I - A A^H)^{-1/2} C,
/// with pseudo-inverse square roots when the factors are singular. Z must
/// have shape rows(B) x cols(C) and ||Z||_2 <= 1 (a small overshoot is
/// rescaled, larger ones are rejected).
Matrix dilation(const Matrix& a, const Matrix& b, const Matrix& c, double mu,
                const Matrix& z);

}  // namespace silsp
