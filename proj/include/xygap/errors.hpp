#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xygap {

enum class ErrorKind {
  InvalidSize,
  InvalidParameter,
  UnsupportedField,
  DegenerateMode,
  OutOfDomain,
  UndefinedConstant,
  UnsupportedRegime,
  SizeCap,
  SectorMixing,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is raised as an Error carrying its kind, so callers
// (the CLI in particular) can map kinds onto exit codes without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xygap
