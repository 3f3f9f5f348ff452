#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "xygap/scan.hpp"

namespace xygap {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotOptions {
  std::string title;
  std::string x_label = "N";
  std::string y_label = "gap";
  bool log_y = false;
  bool lines = true;
  double width = 940;
  double height = 500;
};

/// Single self-contained SVG document. With log_y, nonpositive values are dropped.
void write_svg(std::ostream& out, std::span<const PlotSeries> series, const PlotOptions& options);

/// One series per (Gamma, gamma, method), y = gap or N * gap.
std::vector<PlotSeries> series_from_scan(std::span<const ScanRow> rows, bool scale_by_n);

}  // namespace xygap
