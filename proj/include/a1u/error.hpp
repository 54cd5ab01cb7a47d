#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace a1u {

enum class ErrorCode {
  NotPrime,
  EmptyMatrix,
  OrderExceedsP,
  ShapeError,
  NotOrderP,
  DimensionLimit,
  PrimeMismatch,
  ParseError,
  WeightNotRestricted,
  DuplicateTwist,
  WeightOutOfRange,
  NotRealizable,
  NotCompletelyReducible,
  InvalidPartition,
  InvalidGroup,
  BadPrime,
  DimensionMismatch,
  ParityViolation,
  IdentityElement,
  NoWitnessRule,
  InvalidQuery,
  DataError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is stable
// and is what the CLI prints in its error envelope.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace a1u
