#include "circulant/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "circulant/errors.hpp"

namespace circulant {
namespace {

// G7/K15 nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  const double fc = f(center);
  double resg = kWg[3] * fc;
  double resk = kWgk[7] * fc;
  fv[14] = fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv[2 * i] = f1;
    fv[2 * i + 1] = f2;
    resk += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int i = 0; i < 7; ++i)
    resasc += kWgk[i] * (std::abs(fv[2 * i] - reskh) + std::abs(fv[2 * i + 1] - reskh));
  resasc *= std::abs(half);

  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  p.error = err;
  return p;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_panels) {
  QuadratureResult out;
  if (a == b) return out;
  require(a < b, errc::quadrature_failure, "inverted interval");
  require(abs_tol > 0.0, errc::quadrature_failure, "nonpositive tolerance");

  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  std::vector<Panel> done;
  queue.push(evaluate_panel(f, a, b));
  out.evaluations = 15;
  double total_error = queue.top().error;

  while (total_error > abs_tol &&
         static_cast<int>(done.size()) + static_cast<int>(queue.size()) < max_panels) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    // cannot split below machine resolution; freeze the panel
    if (!(worst.a < mid && mid < worst.b)) {
      done.push_back(worst);
      total_error -= worst.error;
      continue;
    }
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    out.evaluations += 30;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  while (!queue.empty()) {
    done.push_back(queue.top());
    queue.pop();
  }
  std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });

  double sum = 0.0, comp = 0.0, err = 0.0;
  for (const Panel& p : done) {
    const double y = p.value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += p.error;
  }
  out.value = sum;
  out.error = err;
  out.panels = static_cast<int>(done.size());
  if (err > std::max(abs_tol * 1e3, 1e-9 * std::abs(sum)) &&
      static_cast<int>(done.size()) >= max_panels)
    fail(errc::quadrature_failure, "panel budget exhausted, estimate " + std::to_string(err));
  return out;
}

}  // namespace circulant
