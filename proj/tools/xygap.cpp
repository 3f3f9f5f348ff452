#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "xygap/correlations.hpp"
#include "xygap/ed.hpp"
#include "xygap/errors.hpp"
#include "xygap/gap_asymptotic.hpp"
#include "xygap/gap_exact.hpp"
#include "xygap/scan.hpp"
#include "xygap/svg.hpp"
#include "xygap/verify.hpp"

using namespace xygap;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

AsymptoticOrder parse_order(const std::string& s) {
  if (s == "leading") return AsymptoticOrder::Leading;
  if (s == "next") return AsymptoticOrder::NextOrder;
  throw Error(ErrorKind::InvalidParameter, "order must be leading or next");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  return f;
}

struct GapArgs {
  int n = 0;
  double field = 0.0;
  double gamma = 0.0;
  double h = 0.0;
  std::string method = "exact";
  std::string order = "leading";
  int s_max = kDefaultSMax;
  bool header = false;
};

int run_gap(const GapArgs& a) {
  ScanPoint p{a.n, a.field, a.gamma, parse_scan_method(a.method)};
  GapResult r;
  if (a.h != 0.0) {
    if (p.method != ScanMethod::Ed) {
      throw Error(ErrorKind::UnsupportedField, "analytic methods require h = 0");
    }
    r = ed_gap({a.n, a.gamma, a.field, a.h});
  } else {
    r = evaluate_point(p, parse_order(a.order), a.s_max);
  }
  if (a.header) std::cout << kCsvHeader << '\n';
  std::cout << csv_row({p, r}) << '\n';
  return 0;
}

struct ScanArgs {
  int n_min = 2;
  int n_max = 2;
  int n_step = 1;
  std::vector<double> fields{0.0};
  std::vector<double> gammas{0.0};
  std::vector<std::string> methods{"exact"};
  std::string order = "leading";
  int s_max = kDefaultSMax;
  std::string out;
  std::string svg;
  bool scale_by_n = false;
  bool log_y = false;
};

int run_scan_cmd(const ScanArgs& a, int jobs) {
  ScanSpec spec;
  spec.n_min = a.n_min;
  spec.n_max = a.n_max;
  spec.n_step = a.n_step;
  spec.fields = a.fields;
  spec.anisotropies = a.gammas;
  for (const auto& m : a.methods) spec.methods.push_back(parse_scan_method(m));
  spec.order = parse_order(a.order);
  spec.s_max = a.s_max;
  const auto points = spec.points();
  const auto rows = run_scan(points, jobs, spec.order, spec.s_max);

  if (a.out.empty() || a.out == "-") {
    write_csv(std::cout, rows);
  } else {
    auto f = open_output(a.out);
    write_csv(f, rows);
    if (!f) throw Error(ErrorKind::Io, "write to '" + a.out + "' failed");
  }
  if (!a.svg.empty()) {
    auto f = open_output(a.svg);
    PlotOptions opt;
    opt.title = std::filesystem::path(a.svg).stem().string();
    opt.y_label = a.scale_by_n ? "N * gap" : "gap";
    opt.log_y = a.log_y;
    write_svg(f, series_from_scan(rows, a.scale_by_n), opt);
    if (!f) throw Error(ErrorKind::Io, "write to '" + a.svg + "' failed");
  }
  return 0;
}

struct CorrArgs {
  std::optional<int> n;
  int r = 1;
  std::optional<int> r_max;
  double field = 0.0;
  double gamma = 0.0;
  std::string sector = "odd";
  std::string method = "finite";
};

int run_corr(const CorrArgs& a) {
  const int last = a.r_max.value_or(a.r);
  std::cout << "N,R,Gamma,gamma,sector,method,value\n";
  for (int d = a.r; d <= last; ++d) {
    CorrelationResult c;
    if (a.method == "asymptotic") {
      c = corr_zz_infinite_asymptotic(d, a.field, a.gamma);
    } else if (a.method == "finite" || a.method == "ed") {
      if (!a.n) throw Error(ErrorKind::InvalidParameter, "--n is required for finite/ed");
      const Parity sector = parse_parity(a.sector);
      c = a.method == "ed" ? ed_corr_zz({*a.n, a.gamma, a.field, 0.0}, d, sector)
                           : corr_zz_finite(*a.n, d, a.field, a.gamma, sector);
    } else {
      throw Error(ErrorKind::InvalidParameter, "corr method must be finite, asymptotic or ed");
    }
    std::cout << (c.chain_size ? std::to_string(*c.chain_size) : "inf") << ',' << c.distance
              << ',' << format_number(a.field) << ',' << format_number(a.gamma) << ','
              << (c.sector ? std::string(to_string(*c.sector)) : "-") << ','
              << to_string(c.method) << ',' << format_number(c.value) << '\n';
  }
  return 0;
}

struct FourierArgs {
  std::optional<int> l;
  std::optional<int> n;
  double field = 0.0;
  double gamma = 0.0;
  std::string mode = "quadrature";
  int s_max = kDefaultSMax;
};

int run_fourier(const FourierArgs& a) {
  if (a.n) {
    const auto r = gap_fourier(*a.n, a.field, a.gamma, a.s_max);
    std::cout << "N,Gamma,gamma,s_max,gap,ground_parity,truncation_residual\n"
              << *a.n << ',' << format_number(a.field) << ',' << format_number(a.gamma) << ','
              << a.s_max << ',' << format_number(r.value) << ',' << to_string(r.ground_parity)
              << ',' << format_number(*r.truncation_residual) << '\n';
    return 0;
  }
  if (!a.l) throw Error(ErrorKind::InvalidParameter, "fourier needs --l or --n");
  CoefficientMode mode;
  if (a.mode == "quadrature") {
    mode = CoefficientMode::Quadrature;
  } else if (a.mode == "asymptotic") {
    mode = CoefficientMode::Asymptotic;
  } else {
    throw Error(ErrorKind::InvalidParameter, "mode must be quadrature or asymptotic");
  }
  std::cout << "l,Gamma,gamma,mode,a_l\n"
            << *a.l << ',' << format_number(a.field) << ',' << format_number(a.gamma) << ','
            << a.mode << ',' << format_number(fourier_coefficient(*a.l, a.field, a.gamma, mode))
            << '\n';
  return 0;
}

int run_verify(const std::string& suite, bool include_n2) {
  const auto checks = run_suite(parse_suite(suite), include_n2);
  print_checks(std::cout, checks);
  const bool ok = all_passed(checks);
  std::cout << (ok ? "ALL PASS" : "FAILURES") << '\n';
  return ok ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy gap and ZZ correlations of the periodic XY chain in a transverse field"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for scans (0 = OpenMP default)")
      ->envname("XYGAP_JOBS")
      ->check(CLI::NonNegativeNumber);

  const std::vector<std::string> gap_methods{"exact", "closed", "fourier", "asymptotic", "ed"};
  const std::vector<std::string> orders{"leading", "next"};

  GapArgs ga;
  auto* gap = app.add_subcommand("gap", "gap at one (N, Gamma, gamma)");
  gap->add_option("--n", ga.n, "chain size")->required();
  gap->add_option("--field", ga.field, "transverse field Gamma");
  gap->add_option("--gamma", ga.gamma, "anisotropy gamma");
  gap->add_option("--long-field", ga.h, "longitudinal field h (ed only)");
  gap->add_option("--method", ga.method)->check(CLI::IsMember(gap_methods));
  gap->add_option("--order", ga.order, "asymptotic order")->check(CLI::IsMember(orders));
  gap->add_option("--smax", ga.s_max, "last odd s in the Fourier sum");
  gap->add_flag("--header", ga.header, "print the CSV header first");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "gap over a grid of N, Gamma, gamma as CSV");
  scan->add_option("--n-min", sa.n_min);
  scan->add_option("--n-max", sa.n_max);
  scan->add_option("--n-step", sa.n_step);
  scan->add_option("--field", sa.fields, "Gamma values")->delimiter(',');
  scan->add_option("--gamma", sa.gammas, "gamma values")->delimiter(',');
  scan->add_option("--method", sa.methods)->delimiter(',')->check(CLI::IsMember(gap_methods));
  scan->add_option("--order", sa.order)->check(CLI::IsMember(orders));
  scan->add_option("--smax", sa.s_max);
  scan->add_option("--out", sa.out, "CSV path (default stdout)");
  scan->add_option("--svg", sa.svg, "also write an SVG plot");
  scan->add_flag("--scale-by-n", sa.scale_by_n, "plot N * gap");
  scan->add_flag("--log-y", sa.log_y, "logarithmic y axis");

  CorrArgs ca;
  auto* corr = app.add_subcommand("corr", "connected ZZ correlation function");
  corr->add_option("--n", ca.n, "chain size (finite and ed)");
  corr->add_option("--r", ca.r, "distance")->check(CLI::PositiveNumber);
  corr->add_option("--r-max", ca.r_max, "print distances r..r-max");
  corr->add_option("--field", ca.field);
  corr->add_option("--gamma", ca.gamma);
  corr->add_option("--sector", ca.sector)->check(CLI::IsMember({"even", "odd"}, CLI::ignore_case));
  corr->add_option("--method", ca.method)->check(CLI::IsMember({"finite", "asymptotic", "ed"}));

  FourierArgs fa;
  auto* fourier = app.add_subcommand("fourier", "Fourier coefficient a_l, or the Fourier-series gap with --n");
  fourier->add_option("--l", fa.l, "coefficient index");
  fourier->add_option("--n", fa.n, "chain size for the gap");
  fourier->add_option("--field", fa.field);
  fourier->add_option("--gamma", fa.gamma);
  fourier->add_option("--mode", fa.mode)->check(CLI::IsMember({"quadrature", "asymptotic"}));
  fourier->add_option("--smax", fa.s_max);

  std::string suite = "all";
  bool include_n2 = false;
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"oracle", "closed-forms", "asymptotics", "identity", "all"}));
  verify->add_flag("--include-n2", include_n2, "compare N = 2 against the oracle too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gap) return run_gap(ga);
    if (*scan) return run_scan_cmd(sa, jobs);
    if (*corr) return run_corr(ca);
    if (*fourier) return run_fourier(fa);
    if (*verify) return run_verify(suite, include_n2);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
