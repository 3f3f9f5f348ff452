#include "xygap/scan.hpp"

#include <omp.h>

#include <charconv>
#include <exception>
#include <ostream>
#include <sstream>

#include "xygap/ed.hpp"
#include "xygap/errors.hpp"

namespace xygap {

std::string_view to_string(ScanMethod method) {
  switch (method) {
    case ScanMethod::Exact: return "exact";
    case ScanMethod::Closed: return "closed";
    case ScanMethod::Fourier: return "fourier";
    case ScanMethod::Asymptotic: return "asymptotic";
    case ScanMethod::Ed: return "ed";
  }
  return "unknown";
}

ScanMethod parse_scan_method(std::string_view text) {
  for (auto m : {ScanMethod::Exact, ScanMethod::Closed, ScanMethod::Fourier,
                 ScanMethod::Asymptotic, ScanMethod::Ed}) {
    if (text == to_string(m)) return m;
  }
  throw Error(ErrorKind::InvalidParameter, "unknown method '" + std::string(text) + "'");
}

void ScanSpec::validate() const {
  if (n_min < 2 || n_max < n_min || n_step < 1) {
    throw Error(ErrorKind::InvalidParameter, "N range must satisfy 2 <= n_min <= n_max, step >= 1");
  }
  if (fields.empty() || anisotropies.empty() || methods.empty()) {
    throw Error(ErrorKind::InvalidParameter, "scan needs at least one Gamma, gamma and method");
  }
  for (auto m : methods) {
    if (m == ScanMethod::Ed && n_max > kMaxEdSites) {
      throw Error(ErrorKind::SizeCap, "ed scans are capped at N = " + std::to_string(kMaxEdSites));
    }
  }
  if (s_max < 1 || s_max % 2 == 0) {
    throw Error(ErrorKind::InvalidParameter, "s_max must be a positive odd integer");
  }
}

std::vector<ScanPoint> ScanSpec::points() const {
  validate();
  std::vector<ScanPoint> out;
  for (double g : anisotropies) {
    for (double f : fields) {
      for (auto m : methods) {
        for (int n = n_min; n <= n_max; n += n_step) out.push_back({n, f, g, m});
      }
    }
  }
  return out;
}

GapResult evaluate_point(const ScanPoint& point, AsymptoticOrder order, int s_max) {
  switch (point.method) {
    case ScanMethod::Exact:
      return gap_momentum_sum({point.n_sites, point.anisotropy, point.field, 0.0});
    case ScanMethod::Closed:
      if (point.anisotropy != 0.0) {
        throw Error(ErrorKind::OutOfDomain, "the closed form needs gamma = 0");
      }
      return gap_isotropic_closed(point.n_sites, point.field);
    case ScanMethod::Fourier:
      return gap_fourier(point.n_sites, point.field, point.anisotropy, s_max);
    case ScanMethod::Asymptotic:
      return gap_asymptotic(point.n_sites, point.field, point.anisotropy, order);
    case ScanMethod::Ed:
      return ed_gap({point.n_sites, point.anisotropy, point.field, 0.0});
  }
  throw Error(ErrorKind::InvalidParameter, "unknown method");
}

std::vector<ScanRow> run_scan(std::span<const ScanPoint> points, int jobs, AsymptoticOrder order,
                              int s_max) {
  std::vector<ScanRow> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  const auto count = static_cast<std::int64_t>(points.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      rows[k] = {points[k], evaluate_point(points[k], order, s_max)};
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<ScanRow> run_scan_serial(std::span<const ScanPoint> points, AsymptoticOrder order,
                                     int s_max) {
  std::vector<ScanRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back({p, evaluate_point(p, order, s_max)});
  return rows;
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string csv_row(const ScanRow& row) {
  std::string line = std::to_string(row.point.n_sites);
  line += ',';
  line += format_number(row.point.field);
  line += ',';
  line += format_number(row.point.anisotropy);
  line += ',';
  line += to_string(row.point.method);
  line += ',';
  line += format_number(row.result.value);
  line += ',';
  line += to_string(row.result.ground_parity);
  line += ',';
  line += to_string(row.result.regime);
  return line;
}

void write_csv(std::ostream& out, std::span<const ScanRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << csv_row(r) << '\n';
}

}  // namespace xygap
