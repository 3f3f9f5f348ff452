#include "xygap/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "xygap/errors.hpp"

namespace xygap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSize: return "invalid-size";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::UnsupportedField: return "unsupported-field";
    case ErrorKind::DegenerateMode: return "degenerate-mode";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::UndefinedConstant: return "undefined-constant";
    case ErrorKind::UnsupportedRegime: return "unsupported-regime";
    case ErrorKind::SizeCap: return "size-cap";
    case ErrorKind::SectorMixing: return "sector-mixing";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

std::string_view to_string(Parity parity) {
  return parity == Parity::Even ? "Even" : "Odd";
}

Parity parse_parity(std::string_view text) {
  if (text == "even" || text == "Even" || text == "EVEN") return Parity::Even;
  if (text == "odd" || text == "Odd" || text == "ODD") return Parity::Odd;
  throw Error(ErrorKind::InvalidParameter, "unknown parity '" + std::string(text) + "'");
}

void ModelParams::validate() const {
  if (n_sites < 2) {
    throw Error(ErrorKind::InvalidSize,
                "chain size must be >= 2, got " + std::to_string(n_sites));
  }
  if (!std::isfinite(anisotropy) || anisotropy < 0.0 || anisotropy > 1.0) {
    std::ostringstream os;
    os << "anisotropy gamma must lie in [0, 1], got " << anisotropy;
    throw Error(ErrorKind::InvalidParameter, os.str());
  }
  if (!std::isfinite(field) || field < 0.0) {
    std::ostringstream os;
    os << "transverse field Gamma must be >= 0, got " << field;
    throw Error(ErrorKind::InvalidParameter, os.str());
  }
  if (!std::isfinite(longitudinal_field)) {
    throw Error(ErrorKind::InvalidParameter, "longitudinal field must be finite");
  }
}

void require_transverse_only(const ModelParams& params) {
  if (params.longitudinal_field != 0.0) {
    throw Error(ErrorKind::UnsupportedField,
                "analytic routes require a vanishing longitudinal field h");
  }
}

double Momentum::radians() const {
  return static_cast<double>(radians_ld());
}

long double Momentum::radians_ld() const {
  return static_cast<long double>(numerator) * std::numbers::pi_v<long double> /
         static_cast<long double>(denominator);
}

long double Momentum::cos_ld() const {
  if (numerator == 0) return 1.0L;
  if (numerator == denominator) return -1.0L;
  if (2 * numerator == denominator || 2 * numerator == -denominator) return 0.0L;
  return std::cos(radians_ld());
}

long double Momentum::sin_ld() const {
  if (numerator == 0 || numerator == denominator) return 0.0L;
  if (2 * numerator == denominator) return 1.0L;
  if (2 * numerator == -denominator) return -1.0L;
  return std::sin(radians_ld());
}

MomentumGrid momentum_grid(int chain_size, Parity sector) {
  if (chain_size < 2) {
    throw Error(ErrorKind::InvalidSize,
                "chain size must be >= 2, got " + std::to_string(chain_size));
  }
  MomentumGrid grid;
  grid.chain_size = chain_size;
  grid.sector = sector;
  grid.momenta.reserve(static_cast<std::size_t>(chain_size));
  const int wanted = sector == Parity::Odd ? 0 : 1;
  for (int p = -chain_size + 1; p <= chain_size; ++p) {
    if (((p % 2) + 2) % 2 == wanted) grid.momenta.push_back({p, chain_size});
  }
  return grid;
}

double dispersion(double k, double field, double anisotropy) {
  return std::hypot(std::cos(k) + field, anisotropy * std::sin(k));
}

long double dispersion(const Momentum& k, long double field, long double anisotropy) {
  const long double a = k.cos_ld() + field;
  const long double b = anisotropy * k.sin_ld();
  return std::sqrt(a * a + b * b);
}

namespace {

BogoliubovAngle angle_from(long double a, long double b, long double eps,
                           double where) {
  if (eps <= kDegenerateModeTolerance) {
    std::ostringstream os;
    os << "dispersion vanishes at k = " << where << "; Bogoliubov angle undefined";
    throw Error(ErrorKind::DegenerateMode, os.str());
  }
  return {static_cast<double>(a / eps), static_cast<double>(b / eps)};
}

}  // namespace

BogoliubovAngle bogoliubov_angle(double k, double field, double anisotropy) {
  const long double a = std::cos(static_cast<long double>(k)) + field;
  const long double b = anisotropy * std::sin(static_cast<long double>(k));
  return angle_from(a, b, std::sqrt(a * a + b * b), k);
}

BogoliubovAngle bogoliubov_angle(const Momentum& k, double field, double anisotropy) {
  const long double a = k.cos_ld() + field;
  const long double b = anisotropy * k.sin_ld();
  return angle_from(a, b, std::sqrt(a * a + b * b), k.radians());
}

}  // namespace xygap
