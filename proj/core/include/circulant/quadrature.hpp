#pragma once

#include <functional>

namespace circulant {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated error estimate
  int evaluations = 0;
  int panels = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Panels with the largest error
/// estimate are bisected first until the accumulated estimate drops below
/// abs_tol or the panel budget runs out; panel results are re-accumulated in
/// left-to-right order with compensated summation so the value does not
/// depend on the subdivision schedule. Throws errc::quadrature_failure only
/// if the budget is exhausted while the estimate is still far from target.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_panels = 4096);

}  // namespace circulant
