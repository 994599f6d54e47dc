// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace relspin {

// Failure categories. Every throwing path names one so callers (and the CLI
// exit-code mapping) never have to match on message strings.
enum class ErrorKind {
  invalid_parameter,
  superluminal_velocity,
  superluminal_abort,
  numeric_degradation,
  decomposition_failure,
  singular_field,
  singular_limit,
  domain_violation,
  origin_overlap,
  grid_truncation,
  grid_symmetry,
  quadrature_inconsistency,
  singular_operator,
  config,
  io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::superluminal_velocity: return "superluminal-velocity";
    case ErrorKind::superluminal_abort: return "superluminal-abort";
    case ErrorKind::numeric_degradation: return "numeric-degradation";
    case ErrorKind::decomposition_failure: return "decomposition-failure";
    case ErrorKind::singular_field: return "singular-field";
    case ErrorKind::singular_limit: return "singular-limit";
    case ErrorKind::domain_violation: return "domain-violation";
    case ErrorKind::origin_overlap: return "origin-overlap";
    case ErrorKind::grid_truncation: return "grid-truncation";
    case ErrorKind::grid_symmetry: return "grid-symmetry";
    case ErrorKind::quadrature_inconsistency: return "quadrature-inconsistency";
    case ErrorKind::singular_operator: return "singular-operator";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace relspin
