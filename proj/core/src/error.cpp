#include "pflat/error.hpp"

namespace pflat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::FactorizationIncomplete: return "FactorizationIncomplete";
    case ErrorCode::MissingCentralElement: return "MissingCentralElement";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DegenerateDimension: return "DegenerateDimension";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::Schema: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace pflat
