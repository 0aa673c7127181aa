#pragma once

#include <stdexcept>
#include <string>

namespace csgp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed sparse structure: missing diagonal, out-of-range index,
/// pattern-subset violation, invalid permutation.
class StructuralError : public Error {
public:
  using Error::Error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

/// A Cholesky pivot was <= 0. Carries the failing column (in the
/// ordering the factorization ran in) so callers can react, e.g. by
/// adding jitter and retrying.
class NotPositiveDefiniteError : public Error {
public:
  NotPositiveDefiniteError(const std::string& msg, int column)
      : Error(msg), column_(column) {}
  int column() const { return column_; }

private:
  int column_;
};

/// Numerical failure that survived all recovery attempts (jitter ladder
/// exhausted, non-finite objective, all restarts failed).
class NumericalError : public Error {
public:
  using Error::Error;
};

/// Data ingestion problems: unreadable file, unparseable row, empty result.
class DataError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace csgp
