#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpsynth {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation requires the other domain kind (e.g. enumeration of a continuous domain).
class DomainKindError : public Error {
 public:
  using Error::Error;
};

/// Requested enumeration/lattice exceeds the configured point cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share a domain do not.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// Datasets with different column counts where equal dimension is required.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Two densities that must live on the same support do not.
class SupportMismatchError : public Error {
 public:
  using Error::Error;
};

/// q(x) = 0 at a point where p(x) > 0 in a divergence computation.
class AbsoluteContinuityError : public Error {
 public:
  using Error::Error;
};

/// A density that must be strictly positive has a zero weight.
class ZeroMassError : public Error {
 public:
  using Error::Error;
};

/// A parameter calculator was called without the density extremes its regime needs.
class MissingExtremesError : public Error {
 public:
  using Error::Error;
};

/// Experiment configuration is syntactically or semantically invalid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem read/write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

/// The LP solver hit its pivot cap before reaching optimality.
class IterationLimitError : public Error {
 public:
  using Error::Error;
};

/// The LP solver could not find a feasible point (numerical breakdown).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// CSV parse failure; carries the 1-based row and column of the offending cell.
class CsvParseError : public Error {
 public:
  CsvParseError(std::size_t row, std::size_t column, const std::string& message)
      : Error("csv parse error at row " + std::to_string(row) + ", column " +
              std::to_string(column) + ": " + message),
        row_(row),
        column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

}  // namespace dpsynth
