#ifndef PHONDUR_ERROR_HPP
#define PHONDUR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace phondur {

// Malformed input files / formula strings. Carries the offending location
// in the message.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Data that parses but violates an invariant (nonpositive duration,
// duplicate indices, boundary index out of range, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad run configuration or CLI usage.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure while fitting a model (rank deficiency, non-finite
// data, ...). Optimizer iteration caps raise NotConvergedError instead.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phondur

#endif  // PHONDUR_ERROR_HPP
