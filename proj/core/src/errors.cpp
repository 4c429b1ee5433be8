#include "nled/errors.hpp"

#include <limits>

namespace nled {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Configuration: return "Configuration";
    case ErrorKind::DomainExceeded: return "DomainExceeded";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, Diagnostics diagnostics)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      diagnostics_(std::move(diagnostics)) {}

double Error::diagnostic(std::string_view name) const noexcept {
  for (const auto& [key, value] : diagnostics_) {
    if (key == name) return value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace nled
