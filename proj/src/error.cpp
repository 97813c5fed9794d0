#include "brickforge/error.hpp"

namespace brickforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::MissingVertex: return "MissingVertex";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::SpecInvariantViolated: return "SpecInvariantViolated";
    case ErrorKind::NeighborChoiceInfeasible: return "NeighborChoiceInfeasible";
    case ErrorKind::NotABrick: return "NotABrick";
    case ErrorKind::FundamentConflict: return "FundamentConflict";
    case ErrorKind::FundamentMismatch: return "FundamentMismatch";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::NotMinimalBrick: return "NotMinimalBrick";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "Unknown";
}

}  // namespace brickforge
