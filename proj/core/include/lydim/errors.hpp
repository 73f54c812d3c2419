#ifndef LYDIM_ERRORS_HPP
#define LYDIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lydim {

/// Base class for every failure this library reports deliberately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an interface contract (mismatched alphabets, bad flags, ...).
/// The CLI maps this to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the mathematical domain of an operation
/// (ratio not in (0,1), lambda <= 1, inadmissible word, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A finite-horizon stream was asked about symbols beyond its horizon.
/// Streams never extend themselves silently.
class HorizonError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the caller-supplied budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An orbit left the union of branch domains.
class EscapeError : public Error {
 public:
  EscapeError(std::string what, std::size_t step, double point)
      : Error(std::move(what)), step(step), point(point) {}
  std::size_t step;
  double point;
};

/// An internal cross-check failed; indicates a bug or inconsistent inputs.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver hit its cap. Carries the last iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(std::string what, double last_iterate)
      : Error(std::move(what)), last_iterate(last_iterate) {}
  double last_iterate;
};

/// Branch synthesis failed; names the offending row (1-based) and, for
/// covering failures, the minimum feasible expansion rate.
class SynthesisError : public Error {
 public:
  SynthesisError(std::string what, std::size_t row, double min_feasible_lambda)
      : Error(std::move(what)), row(row), min_feasible_lambda(min_feasible_lambda) {}
  std::size_t row;
  double min_feasible_lambda;
};

}  // namespace lydim

#endif  // LYDIM_ERRORS_HPP
