#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xygap/gap_asymptotic.hpp"
#include "xygap/gap_exact.hpp"

namespace xygap {

enum class ScanMethod { Exact, Closed, Fourier, Asymptotic, Ed };

std::string_view to_string(ScanMethod method);
ScanMethod parse_scan_method(std::string_view text);

struct ScanPoint {
  int n_sites = 2;
  double field = 0.0;
  double anisotropy = 0.0;
  ScanMethod method = ScanMethod::Exact;
};

struct ScanSpec {
  int n_min = 2;
  int n_max = 2;
  int n_step = 1;
  std::vector<double> fields;
  std::vector<double> anisotropies;
  std::vector<ScanMethod> methods;
  AsymptoticOrder order = AsymptoticOrder::Leading;
  int s_max = kDefaultSMax;

  /// Throws Error{InvalidParameter | SizeCap}.
  void validate() const;
  /// Row order: gamma, then Gamma, then method, then N ascending.
  std::vector<ScanPoint> points() const;
};

struct ScanRow {
  ScanPoint point;
  GapResult result;
};

GapResult evaluate_point(const ScanPoint& point, AsymptoticOrder order = AsymptoticOrder::Leading,
                         int s_max = kDefaultSMax);

/// Rows come back in input order. The first failing point (in input order) is rethrown.
std::vector<ScanRow> run_scan(std::span<const ScanPoint> points, int jobs,
                              AsymptoticOrder order = AsymptoticOrder::Leading,
                              int s_max = kDefaultSMax);
std::vector<ScanRow> run_scan_serial(std::span<const ScanPoint> points,
                                     AsymptoticOrder order = AsymptoticOrder::Leading,
                                     int s_max = kDefaultSMax);

/// Shortest representation that round-trips.
std::string format_number(double value);

inline constexpr std::string_view kCsvHeader = "N,Gamma,gamma,method,gap,ground_parity,regime";

std::string csv_row(const ScanRow& row);
void write_csv(std::ostream& out, std::span<const ScanRow> rows);

}  // namespace xygap
