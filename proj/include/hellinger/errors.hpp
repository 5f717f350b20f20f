#pragma once

#include <stdexcept>
#include <string>

namespace hellinger {

/// Operands of incompatible size (matrix dimension, sequence length).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPositiveDefiniteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar function was evaluated outside its domain, or a parameter is out of range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative numerical kernel (eigensolver, quadrature) failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity that is nonnegative in exact arithmetic came out negative beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested combination of options has no meaning (e.g. an objective with no distance).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hellinger
