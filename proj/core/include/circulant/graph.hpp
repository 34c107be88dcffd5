#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "circulant/errors.hpp"

namespace circulant {

/// Combinatorial circulant graph C_n(a): vertices 1..n, i ~ j iff
/// |i-j| = a_h (mod n) for some jump a_h. Requires 0 < a_1 < ... < a_d < n/2
/// and gcd(a_1,...,a_d,n) = 1; the double-edge case a_d = n/2 is rejected.
struct CirculantSpec {
  int n = 0;
  std::vector<int> jumps;

  int d() const { return static_cast<int>(jumps.size()); }
  long edge_count() const { return static_cast<long>(n) * d(); }
  int degree() const { return 2 * d(); }
};

CirculantSpec validate_spec(int n, std::vector<int> jumps);

/// Bernoulli draw with probability p over {1,...,floor((n-1)/2)}, repeated
/// (up to 16 times) until the result validates. Deterministic given seed.
CirculantSpec random_spec(int n, double p, std::uint64_t seed);

bool is_prime(int n);

/// Edge (u,v) oriented u -> v = u + a_h (mod n), vertices 1..n. Canonical
/// order is class-major: h = 0..d-1, then u = 1..n.
struct Edge {
  int u = 0;
  int v = 0;
  int jump_class = 0;  // index into CirculantSpec::jumps
};

struct SymmetricMetric {
  std::vector<double> class_lengths;  // one length per jump class
};

struct GenericMetric {
  std::vector<double> edge_lengths;  // canonical edge order
};

using Metric = std::variant<SymmetricMetric, GenericMetric>;

class MetricGraph {
 public:
  MetricGraph(CirculantSpec spec, Metric metric);

  const CirculantSpec& spec() const { return spec_; }
  const Metric& metric() const { return metric_; }
  bool symmetric() const { return std::holds_alternative<SymmetricMetric>(metric_); }
  const std::vector<double>& class_lengths() const;  // symmetric metrics only

  const std::vector<Edge>& edges() const { return edges_; }
  double edge_length(std::size_t edge_index) const;
  double total_length() const { return total_length_; }
  double min_edge_length() const { return min_length_; }

  MetricGraph scaled(double factor) const;  // all lengths multiplied by factor

 private:
  CirculantSpec spec_;
  Metric metric_;
  std::vector<Edge> edges_;
  double total_length_ = 0.0;
  double min_length_ = 0.0;
};

MetricGraph with_random_lengths(const CirculantSpec& spec, double lo, double hi,
                                std::uint64_t seed);  // generic, one draw per edge
MetricGraph with_random_class_lengths(const CirculantSpec& spec, double lo, double hi,
                                      std::uint64_t seed);  // symmetric, one per class

struct DirichletPoint {
  double k = 0.0;
  int edge_class = -1;  // jump class of the supporting edge(s)
  int edge_index = -1;  // canonical edge id, -1 for symmetric metrics
  int m = 0;            // harmonic index, k = m*pi/length
};

/// All m*pi/L <= kmax, one family per edge class (symmetric metric) or per
/// edge (generic metric), sorted by k.
std::vector<DirichletPoint> dirichlet_points(const MetricGraph& g, double kmax);

struct WeylEstimate {
  double expected = 0.0;  // (b-a) * L / pi
  double bound = 0.0;     // remainder bound: nd+n+d symmetric, nd+n generic
};

WeylEstimate weyl_estimate(const MetricGraph& g, double a, double b);

/// Graph spec file:
/// { "n": int, "a": [int], "metric": {"symmetric": [..]} | {"generic": [..]}
///   | {"random_uniform": {"lo": f, "hi": f, "seed": int, "per_class": bool?}} }
MetricGraph load_graph_json(const std::string& path);
MetricGraph parse_graph_json(const std::string& text);

}  // namespace circulant
