#include "xygap/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "xygap/errors.hpp"

namespace xygap {

GaussLegendreRule gauss_legendre(int points) {
  if (points < 1) throw Error(ErrorKind::InvalidParameter, "Gauss-Legendre needs >= 1 point");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(points));
  rule.weights.resize(static_cast<std::size_t>(points));
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= points; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = points * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(points - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels,
                        const GaussLegendreRule& rule) {
  if (panels < 1) throw Error(ErrorKind::InvalidParameter, "need at least one panel");
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    total += 0.5 * h * s;
  }
  return total;
}

}  // namespace xygap
