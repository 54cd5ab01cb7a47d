#include "a1u/error.hpp"

namespace a1u {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::OrderExceedsP: return "OrderExceedsP";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::NotOrderP: return "NotOrderP";
    case ErrorCode::DimensionLimit: return "DimensionLimit";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::WeightNotRestricted: return "WeightNotRestricted";
    case ErrorCode::DuplicateTwist: return "DuplicateTwist";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::NotCompletelyReducible: return "NotCompletelyReducible";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::IdentityElement: return "IdentityElement";
    case ErrorCode::NoWitnessRule: return "NoWitnessRule";
    case ErrorCode::InvalidQuery: return "InvalidQuery";
    case ErrorCode::DataError: return "DataError";
  }
  return "Unknown";
}

}  // namespace a1u
