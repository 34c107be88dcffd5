#pragma once

#include <Eigen/Dense>

namespace circulant {

/// Determinant of a real symmetric (possibly indefinite) matrix, held as
/// log-magnitude plus sign so large graphs cannot overflow, together with the
/// inertia (number of negative eigenvalues). Based on the Bunch-Kaufman
/// LDL^T factorization with partial pivoting; the symmetric permutation does
/// not change the determinant, and by Sylvester's law the block signs of D
/// give the inertia.
struct SymDet {
  double log_abs = 0.0;        // log|det|, -inf when singular
  int sign = 0;                // -1, 0, +1
  int negative_eigenvalues = 0;

  double value() const;  // sign * exp(log_abs); +-inf on overflow
};

/// Factorizes a copy of `a` (only the lower triangle is referenced).
SymDet sym_indefinite_det(Eigen::MatrixXd a);

}  // namespace circulant
