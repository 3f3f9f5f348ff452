#include "xygap/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <tuple>

namespace xygap {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_number(std::round(v * 100.0) / 100.0); }

}  // namespace

void write_svg(std::ostream& out, std::span<const PlotSeries> series, const PlotOptions& options) {
  const double left = 80, right = 270, top = 40, bottom = 60;
  const double pw = options.width - left - right;
  const double ph = options.height - top - bottom;

  auto ty = [&](double y) { return options.log_y ? std::log10(y) : y; };
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (options.log_y && !(s.y[i] > 0.0)) continue;
      if (!std::isfinite(s.y[i])) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, ty(s.y[i]));
      y1 = std::max(y1, ty(s.y[i]));
    }
  }
  if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (options.log_y) {
    y0 = std::floor(y0);
    y1 = std::ceil(y1);
  } else {
    y0 = std::min(y0, 0.0);
  }
  if (y1 == y0) y1 = y0 + 1;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + (1.0 - (y - y0) / (y1 - y0)) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    out << "<text x=\"" << num(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << escape(options.title) << "</text>\n";
  }
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << num(pw) << "\" height=\""
      << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 5; ++t) {
    const double xv = x0 + (x1 - x0) * t / 5.0;
    out << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(top + ph + 18)
        << "\" text-anchor=\"middle\">" << format_number(std::round(xv * 100) / 100) << "</text>\n";
  }
  const int yticks = options.log_y ? static_cast<int>(std::min(10.0, y1 - y0)) : 5;
  for (int t = 0; t <= yticks; ++t) {
    const double yv = y0 + (y1 - y0) * t / yticks;
    const std::string label = options.log_y ? "1e" + format_number(std::round(yv))
                                            : format_number(std::round(yv * 1e4) / 1e4);
    out << "<line x1=\"" << left << "\" x2=\"" << num(left + pw) << "\" y1=\"" << num(py(yv))
        << "\" y2=\"" << num(py(yv)) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << num(py(yv) + 4) << "\" text-anchor=\"end\">"
        << label << "</text>\n";
  }
  out << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(options.height - 15)
      << "\" text-anchor=\"middle\">" << escape(options.x_label) << "</text>\n";
  out << "<text transform=\"translate(18," << num(top + ph / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape(options.y_label) << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % std::size(kPalette)];
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if ((options.log_y && !(s.y[i] > 0.0)) || !std::isfinite(s.y[i])) continue;
      pts += num(px(s.x[i])) + "," + num(py(ty(s.y[i]))) + " ";
    }
    if (options.lines) {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\""
          << pts << "\"/>\n";
    }
    out << "<g fill=\"" << color << "\">";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if ((options.log_y && !(s.y[i] > 0.0)) || !std::isfinite(s.y[i])) continue;
      out << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(ty(s.y[i])))
          << "\" r=\"1.8\"/>";
    }
    out << "</g>\n";
    const double ly = top + 14 + 18 * static_cast<double>(si);
    out << "<rect x=\"" << num(left + pw + 12) << "\" y=\"" << num(ly - 9)
        << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>";
    out << "<text x=\"" << num(left + pw + 28) << "\" y=\"" << num(ly) << "\">" << escape(s.label)
        << "</text>\n";
  }
  out << "</svg>\n";
}

std::vector<PlotSeries> series_from_scan(std::span<const ScanRow> rows, bool scale_by_n) {
  std::vector<PlotSeries> out;
  std::map<std::tuple<double, double, ScanMethod>, std::size_t> index;
  for (const auto& r : rows) {
    const auto key = std::make_tuple(r.point.field, r.point.anisotropy, r.point.method);
    auto it = index.find(key);
    if (it == index.end()) {
      PlotSeries s;
      s.label = "Gamma=" + format_number(r.point.field) + " gamma=" +
                format_number(r.point.anisotropy) + " " + std::string(to_string(r.point.method));
      out.push_back(std::move(s));
      it = index.emplace(key, out.size() - 1).first;
    }
    auto& s = out[it->second];
    s.x.push_back(r.point.n_sites);
    s.y.push_back(scale_by_n ? r.point.n_sites * r.result.value : r.result.value);
  }
  return out;
}

}  // namespace xygap
