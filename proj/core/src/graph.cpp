#include "circulant/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace circulant {

CirculantSpec validate_spec(int n, std::vector<int> jumps) {
  require(n >= 3, errc::jump_out_of_range, "need n >= 3, got n = " + std::to_string(n));
  require(!jumps.empty(), errc::empty_jump_set, "jump set is empty");
  for (std::size_t h = 0; h + 1 < jumps.size(); ++h)
    require(jumps[h] < jumps[h + 1], errc::not_strictly_increasing,
            "jumps must satisfy a_1 < a_2 < ... < a_d");
  require(jumps.front() > 0, errc::jump_out_of_range, "jumps must be positive");
  // 2*a_d < n also rejects the a_d = n/2 double-edge case
  require(2 * jumps.back() < n, errc::jump_out_of_range,
          "jump " + std::to_string(jumps.back()) + " >= n/2 with n = " + std::to_string(n));
  int g = n;
  for (int a : jumps) g = std::gcd(g, a);
  require(g == 1, errc::disconnected,
          "gcd(a_1,...,a_d,n) = " + std::to_string(g) + ", graph is disconnected");
  CirculantSpec spec;
  spec.n = n;
  spec.jumps = std::move(jumps);
  return spec;
}

namespace {

// fixed-procedure uniform in [0,1): 53 random bits, identical on every platform
double canonical_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CirculantSpec random_spec(int n, double p, std::uint64_t seed) {
  require(n >= 3, errc::jump_out_of_range, "need n >= 3");
  require(p > 0.0 && p <= 1.0, errc::invalid_probability,
          "inclusion probability must be in (0, 1]");
  const int half = (n - 1) / 2;
  std::mt19937_64 rng(seed);
  std::string last_error;
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<int> jumps;
    for (int a = 1; a <= half; ++a)
      if (canonical_double(rng) < p) jumps.push_back(a);
    if (jumps.empty()) {
      last_error = "empty draw";
      continue;
    }
    try {
      return validate_spec(n, std::move(jumps));
    } catch (const Error& e) {
      last_error = e.what();  // disconnected draw for composite n, redraw
    }
  }
  fail(errc::empty_jump_set,
       "no valid jump set after 16 draws (n = " + std::to_string(n) + ", p = " +
           std::to_string(p) + "): " + last_error);
}

bool is_prime(int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int q = 3; static_cast<long>(q) * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

MetricGraph::MetricGraph(CirculantSpec spec, Metric metric)
    : spec_(std::move(spec)), metric_(std::move(metric)) {
  edges_.reserve(static_cast<std::size_t>(spec_.edge_count()));
  for (int h = 0; h < spec_.d(); ++h)
    for (int u = 1; u <= spec_.n; ++u) {
      Edge e;
      e.u = u;
      e.v = (u - 1 + spec_.jumps[static_cast<std::size_t>(h)]) % spec_.n + 1;
      e.jump_class = h;
      edges_.push_back(e);
    }

  if (auto* sym = std::get_if<SymmetricMetric>(&metric_)) {
    require(static_cast<int>(sym->class_lengths.size()) == spec_.d(), errc::argument_out_of_range,
            "need one class length per jump");
    for (double l : sym->class_lengths)
      require(l > 0.0 && std::isfinite(l), errc::argument_out_of_range,
              "lengths must be positive and finite");
  } else {
    auto& gen = std::get<GenericMetric>(metric_);
    require(gen.edge_lengths.size() == edges_.size(), errc::argument_out_of_range,
            "need one length per edge (" + std::to_string(edges_.size()) + ")");
    for (double l : gen.edge_lengths)
      require(l > 0.0 && std::isfinite(l), errc::argument_out_of_range,
              "lengths must be positive and finite");
  }

  total_length_ = 0.0;
  min_length_ = std::numeric_limits<double>::infinity();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const double l = edge_length(e);
    total_length_ += l;
    min_length_ = std::min(min_length_, l);
  }
}

const std::vector<double>& MetricGraph::class_lengths() const {
  const auto* sym = std::get_if<SymmetricMetric>(&metric_);
  require(sym != nullptr, errc::symmetric_metric, "symmetric metric required");
  return sym->class_lengths;
}

double MetricGraph::edge_length(std::size_t edge_index) const {
  const Edge& e = edges_[edge_index];
  if (auto* sym = std::get_if<SymmetricMetric>(&metric_))
    return sym->class_lengths[static_cast<std::size_t>(e.jump_class)];
  return std::get<GenericMetric>(metric_).edge_lengths[edge_index];
}

MetricGraph MetricGraph::scaled(double factor) const {
  require(factor > 0.0 && std::isfinite(factor), errc::argument_out_of_range,
          "scale factor must be positive");
  Metric m = metric_;
  if (auto* sym = std::get_if<SymmetricMetric>(&m))
    for (double& l : sym->class_lengths) l *= factor;
  else
    for (double& l : std::get<GenericMetric>(m).edge_lengths) l *= factor;
  return MetricGraph(spec_, std::move(m));
}

MetricGraph with_random_lengths(const CirculantSpec& spec, double lo, double hi,
                                std::uint64_t seed) {
  require(0.0 < lo && lo < hi, errc::argument_out_of_range, "need 0 < lo < hi");
  std::mt19937_64 rng(seed);
  GenericMetric m;
  m.edge_lengths.resize(static_cast<std::size_t>(spec.edge_count()));
  for (double& l : m.edge_lengths) l = lo + (hi - lo) * canonical_double(rng);
  return MetricGraph(spec, std::move(m));
}

MetricGraph with_random_class_lengths(const CirculantSpec& spec, double lo, double hi,
                                      std::uint64_t seed) {
  require(0.0 < lo && lo < hi, errc::argument_out_of_range, "need 0 < lo < hi");
  std::mt19937_64 rng(seed);
  SymmetricMetric m;
  m.class_lengths.resize(static_cast<std::size_t>(spec.d()));
  for (double& l : m.class_lengths) l = lo + (hi - lo) * canonical_double(rng);
  return MetricGraph(spec, std::move(m));
}

std::vector<DirichletPoint> dirichlet_points(const MetricGraph& g, double kmax) {
  require(kmax > 0.0 && std::isfinite(kmax), errc::argument_out_of_range, "kmax must be positive");
  constexpr double kPi = 3.14159265358979323846;
  std::vector<DirichletPoint> out;
  auto emit = [&](double length, int edge_class, int edge_index) {
    const long mmax = static_cast<long>(std::floor(kmax * length / kPi + 1e-12));
    for (long m = 1; m <= mmax; ++m) {
      DirichletPoint p;
      p.k = static_cast<double>(m) * kPi / length;
      p.edge_class = edge_class;
      p.edge_index = edge_index;
      p.m = static_cast<int>(m);
      out.push_back(p);
    }
  };
  if (g.symmetric()) {
    const auto& lens = g.class_lengths();
    for (int h = 0; h < g.spec().d(); ++h) emit(lens[static_cast<std::size_t>(h)], h, -1);
  } else {
    for (std::size_t e = 0; e < g.edges().size(); ++e)
      emit(g.edge_length(e), g.edges()[e].jump_class, static_cast<int>(e));
  }
  std::sort(out.begin(), out.end(),
            [](const DirichletPoint& x, const DirichletPoint& y) { return x.k < y.k; });
  return out;
}

WeylEstimate weyl_estimate(const MetricGraph& g, double a, double b) {
  require(0.0 <= a && a <= b, errc::argument_out_of_range, "need 0 <= a <= b");
  constexpr double kPi = 3.14159265358979323846;
  WeylEstimate w;
  w.expected = (b - a) * g.total_length() / kPi;
  const double n = g.spec().n;
  const double d = g.spec().d();
  w.bound = g.symmetric() ? n * d + n + d : n * d + n;
  return w;
}

}  // namespace circulant
