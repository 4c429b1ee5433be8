#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nled {

enum class ErrorKind {
  Configuration,
  DomainExceeded,
  NoSolution,
  ConvergenceFailure,
  Divergent,
  NumericalFailure,
  Unsupported,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Named numeric values attached to a failure (offending field, radius, achieved error, ...).
using Diagnostics = std::vector<std::pair<std::string, double>>;

/// The single exception type thrown by the library. `kind()` classifies the failure;
/// `diagnostics()` carries the record the CLI forwards as machine-readable JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, Diagnostics diagnostics = {});

  ErrorKind kind() const noexcept { return kind_; }
  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

  /// Value of a named diagnostic, or NaN when absent.
  double diagnostic(std::string_view name) const noexcept;

 private:
  ErrorKind kind_;
  Diagnostics diagnostics_;
};

}  // namespace nled
