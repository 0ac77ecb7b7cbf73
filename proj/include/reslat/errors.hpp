#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace reslat {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by `validate` when raw tables do not describe a residuated lattice.
class ValidationError : public Error {
 public:
  enum class Kind {
    Malformed,             // shape or index problems in the raw tables
    NotALattice,           // order is not a partial order, or lub/glb missing
    NotCommutativeMonoid,  // commutativity, unit or associativity fails
    AdjunctionFails,       // x*z <= y  <=>  z <= x->y  fails for (x,y,z)
    ResiduumMismatch,      // supplied residuum differs from the derived one
    NoResiduum,            // derive_residuum produced a non-adjoint table
    SizeOverflow,          // carrier exceeds the configured bound
  };

  ValidationError(Kind kind, std::vector<std::size_t> witness,
                  const std::string& message)
      : Error(message), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const noexcept { return kind_; }
  /// Element indices that exhibit the failure (pair or triple, may be empty).
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::vector<std::size_t> witness_;
};

const char* to_string(ValidationError::Kind kind);

/// A filter argument was the whole carrier where a proper filter is needed.
class ImproperInput : public Error {
 public:
  using Error::Error;
};

/// prime_extension: the filter already meets the avoided set.
class Unsatisfiable : public Error {
 public:
  using Error::Error;
};

/// omega_filter: argument is not an ideal of the underlying lattice.
class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

/// modelgen: requested size is beyond the supported bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Two characterizations that must agree gave different answers.
///
/// `detail` names the disagreeing criteria; `algebra_dump` holds the
/// offending algebra in the text file format when available.
class EquivalenceViolation : public Error {
 public:
  EquivalenceViolation(const std::string& detail, std::string algebra_dump = {})
      : Error("equivalence violation: " + detail),
        algebra_dump_(std::move(algebra_dump)) {}

  const std::string& algebra_dump() const noexcept { return algebra_dump_; }

 private:
  std::string algebra_dump_;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Algebra text/JSON could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace reslat
