#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "circulant/graph.hpp"
#include "circulant/linalg.hpp"

namespace circulant {

/// Representation label j of Z_n, canonicalized to 0 <= j <= n/2 with
/// p_j = p_{n-j}. Conjugate pairs carry weight 2, j = 0 and j = n/2 weight 1.
struct RepIndex {
  int j = 0;
  int weight = 1;
};

RepIndex rep_index(const CirculantSpec& spec, int j);

struct SecularMatrixValue {
  double k = 0.0;
  Eigen::MatrixXd entries;
  // min over edges of |kL - m pi| / (kL), m the nearest integer
  double nearest_pole_distance = 0.0;
};

/// M(k): diagonal -sum_{j~i} cot(k L_ij), off-diagonal csc(k L_ij).
/// Rejects k within the pole guard band min_e |sin(k L_e)| < 1e-12.
SecularMatrixValue assemble_M(const MetricGraph& g, double k);

/// det M(k) in log-magnitude + sign form (Bunch-Kaufman factorization);
/// negative_eigenvalues is the inertia used for certified root counts.
SymDet det_M_log(const MetricGraph& g, double k);
double det_M(const MetricGraph& g, double k);

/// p_j(k) of the symmetric secular equation, three-case form:
/// j = 0 tangent sum, interior cot/csc sum, j = n/2 mixed by jump parity.
double eval_p(const MetricGraph& g, RepIndex rep, double k);

struct PolePoint {
  double k = 0.0;
  int multiplicity = 1;      // coincident poles from equal class lengths merged
  std::vector<int> classes;  // contributing jump classes
};

/// Asymptotes of p_j in (0, kmax], sorted. Classes with 2 j a_h = 0 (mod n)
/// keep only half their pole family (odd or even harmonics); the removed
/// half reappears as Dirichlet eigenvalues.
std::vector<PolePoint> poles_p(const MetricGraph& g, RepIndex rep, double kmax);

/// p_0 * prod p_j^2 (odd n) or p_0 * p_{n/2} * prod p_j^2 (even n);
/// equals det M(k) for symmetric metrics.
double factorized_det(const MetricGraph& g, double k);

/// Hyperbolic counterparts on the imaginary axis.
/// Symmetric: f-hat_j(t); generic: det[t * M-hat(t)] (the t-scaled form stays
/// finite as t -> 0, where it behaves like c t^2).
double eval_fhat(const MetricGraph& g, RepIndex rep, double t);
double eval_fhat(const MetricGraph& g, double t);

/// Evaluator for one representation's f-hat with the stable log-derivatives
/// the zeta integrals need. "Regularized" means f-hat_0/t for j = 0 and
/// t*f-hat_j otherwise, i.e. the combination that is analytic and nonzero at
/// t = 0.
class FhatSymmetric {
 public:
  FhatSymmetric(const MetricGraph& g, RepIndex rep);

  double value(double t) const;          // f-hat_j(t)
  double regular_value(double t) const;  // f-hat_0/t or t*f-hat_j
  double dlog(double t) const;           // d/dt log f-hat_j, use for t >= 1
  double dlog_regular(double t) const;   // d/dt log of the regularized form
  double regular_limit0() const;         // value of the regularized form at t = 0
  double limit_inf() const { return static_cast<double>(terms_.size()); }
  int rep_j() const { return j_; }

 private:
  enum class Kind { tanh_half, cosine, coth_half };
  struct Term {
    Kind kind;
    double length;
    double cos_theta;      // cosine kind only
    double sin_half_sq;    // sin^2(theta/2)
  };
  int j_ = 0;
  bool divide_by_t_ = false;  // j = 0 regularization divides by t
  std::vector<Term> terms_;
};

/// det M-hat(t) machinery for generic metrics. chi(t) is the stable
/// evaluation of d/dt log(det[t M-hat]/t^2); the 2/t cancellation against
/// the trace is removed analytically by deflating the eigenvalue of t*M-hat
/// that vanishes as t -> 0.
class FhatGeneric {
 public:
  explicit FhatGeneric(const MetricGraph& g);

  double det_scaled(double t) const;  // det[t M-hat(t)]
  double chi(double t) const;         // d/dt log(det[t M-hat]/t^2)
  double dlog(double t) const;        // tr(M-hat^{-1} M-hat'), use for t >= 1

 private:
  struct EdgeRef {
    int u, v;  // 0-based
    double length;
  };
  Eigen::MatrixXd build_N(double t) const;       // t M-hat(t)
  Eigen::MatrixXd build_Nprime(double t) const;  // d/dt [t M-hat(t)]
  Eigen::MatrixXd build_Delta(double t) const;   // N(t) - N(0)
  Eigen::MatrixXd build_Rho(double t) const;     // t N' - 2(N - N(0))
  int n_ = 0;
  std::vector<EdgeRef> edges_;
};

}  // namespace circulant
