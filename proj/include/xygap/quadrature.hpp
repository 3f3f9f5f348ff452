#pragma once

#include <functional>
#include <vector>

namespace xygap {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int points);

/// Composite Gauss-Legendre over equal panels of [a, b].
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, const GaussLegendreRule& rule);

}  // namespace xygap
