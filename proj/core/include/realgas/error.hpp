#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realgas {

/// Base of every error raised by the library. Callers that only need to
/// report a failure can catch this; the subclasses exist so that tests and
/// drivers can tell the failure modes apart.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. rho <= 0).
class DomainError : public Error {
public:
  using Error::Error;
};

/// kappa(rho) <= 0 or gamma <= 1: the EOS cannot be inverted for e.
class DegenerateEosError : public Error {
public:
  using Error::Error;
};

/// c^2 <= 0: state lies outside the convex region of the EOS.
class ConvexityError : public Error {
public:
  using Error::Error;
};

/// A Riemann fan would open a vacuum (or the star pressure would drop to
/// the cavitation limit -p_inf).
class VacuumError : public Error {
public:
  using Error::Error;
};

/// The two GRP wave relations are linearly dependent to working precision.
class DegenerateBridgeError : public Error {
public:
  using Error::Error;
};

/// An iteration did not reach its tolerance.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// Side state or wave data that cannot be evaluated (negative radicand etc.).
class InvalidStateError : public Error {
public:
  using Error::Error;
};

/// A function was called with inputs that violate its documented contract,
/// e.g. rarefaction coefficients requested for a shock side.
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// Hugoniot root could not be bracketed.
class HugoniotError : public Error {
public:
  using Error::Error;
};

/// A finite-volume step produced an inadmissible cell.
class StepFailure : public Error {
public:
  StepFailure(const std::string& what, std::size_t cell)
      : Error(what + " at cell " + std::to_string(cell)), cell_(cell) {}
  std::size_t cell() const noexcept { return cell_; }

private:
  std::size_t cell_;
};

class RegistryError : public Error {
public:
  using Error::Error;
};

/// Configuration parse or validation failure. line() is 0 for validation
/// errors that are not tied to a source line.
class ConfigError : public Error {
public:
  ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace realgas
