#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace coldgrav {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A series or function diverges at the requested point (g_k(1) for k <= 1).
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed user input: scenario files, unit tokens, sweep specs.
class InputError : public Error {
 public:
  using Error::Error;
};

// The requested state would require z >= 1, i.e. a Bose-condensed gas.
class CondensedError : public Error {
 public:
  CondensedError(const std::string& what, double phase_space_density,
                 std::optional<std::size_t> index = std::nullopt)
      : Error(what), phase_space_density_(phase_space_density), index_(index) {}

  /// N * lambda_dB^3 of the offending state (NaN when not applicable).
  double phase_space_density() const noexcept { return phase_space_density_; }
  /// Grid index of the offending point for vectorized operations.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  double phase_space_density_;
  std::optional<std::size_t> index_;
};

// An iterative numerical scheme failed to reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RootFindError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace coldgrav
