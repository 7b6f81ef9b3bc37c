#pragma once

#include <stdexcept>
#include <string>

namespace shear {

/// Argument outside the domain of an operation (|ζ| ≥ 1, point outside the ball, r ∉ (0,1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A coefficient-based operation was requested on a closed-form function.
class UnsupportedRepresentation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Plain evaluation refused because the log-magnitude exceeds the overflow threshold.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A growth bound was requested for a map without a starlike certificate.
class NotCertifiedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bad scan/grid configuration or malformed input file.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace shear
