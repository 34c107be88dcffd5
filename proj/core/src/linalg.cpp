#include "circulant/linalg.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <lapacke.h>

#include "circulant/errors.hpp"

namespace circulant {

double SymDet::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

SymDet sym_indefinite_det(Eigen::MatrixXd a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  require(a.rows() == a.cols() && n > 0, errc::argument_out_of_range,
          "square matrix expected");
  std::vector<lapack_int> ipiv(static_cast<std::size_t>(n));
  lapack_int info = LAPACKE_dsytrf(LAPACK_COL_MAJOR, 'L', n, a.data(), n, ipiv.data());
  require(info >= 0, errc::argument_out_of_range, "dsytrf: illegal argument");

  SymDet out;
  out.sign = 1;
  lapack_int k = 0;
  while (k < n) {
    if (ipiv[static_cast<std::size_t>(k)] > 0) {
      const double d = a(k, k);
      if (d == 0.0) {
        out.sign = 0;
        out.log_abs = -std::numeric_limits<double>::infinity();
        ++out.negative_eigenvalues;  // treat exact zero as crossing
      } else {
        out.log_abs += std::log(std::abs(d));
        if (d < 0.0) {
          out.sign = -out.sign;
          ++out.negative_eigenvalues;
        }
      }
      ++k;
    } else {
      // 2x2 block [d11 d21; d21 d22]; Bunch-Kaufman picks these indefinite
      const double d11 = a(k, k);
      const double d22 = a(k + 1, k + 1);
      const double d21 = a(k + 1, k);
      const double det = d11 * d22 - d21 * d21;
      if (det == 0.0) {
        out.sign = 0;
        out.log_abs = -std::numeric_limits<double>::infinity();
        ++out.negative_eigenvalues;
      } else {
        out.log_abs += std::log(std::abs(det));
        if (det < 0.0) {
          out.sign = -out.sign;
          ++out.negative_eigenvalues;
        } else {
          // same-sign pair, sign of the trace decides
          if (d11 + d22 < 0.0) out.negative_eigenvalues += 2;
        }
      }
      k += 2;
    }
  }
  if (out.sign == 0) out.log_abs = -std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace circulant
