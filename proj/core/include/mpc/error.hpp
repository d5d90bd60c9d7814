#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mpc {

enum class ErrorCode {
  // field
  NonPrimeP,
  ReducibleModulus,
  DegreeMismatch,
  ZeroInverse,
  FieldMismatch,
  // linalg
  DependentRows,
  Singular,
  Inconsistent,
  NotInRowSpace,
  // source
  ShiftCollision,
  ShapeError,
  ZeroInL,
  NotInSource,
  TooLarge,
  // parent
  NoDecomposition,
  NotPerfectSize,
  IndivisibleSN,
  SearchExhausted,
  ProportionalColumns,
  // code
  BadPartition,
  NonInvertibleU,
  NotInjectiveStack,
  WrongNullspace,
  NoWitness,
  // codec
  DuplicateSyndrome,
  UnknownSyndrome,
  Ambiguous,
  NotFound,
  // analysis
  DecompositionMismatch,
  InvalidCompression,
  // io
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mpc
