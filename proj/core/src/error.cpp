#include "schlicht/error.hpp"

namespace schlicht {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::BranchCut: return "BranchCut";
    case ErrorCode::NonzeroInnerConstant: return "NonzeroInnerConstant";
    case ErrorCode::DegenerateRadius: return "DegenerateRadius";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::EvaluationFailure: return "EvaluationFailure";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::PoleOfPsi: return "PoleOfPsi";
    case ErrorCode::DegenerateDerivative: return "DegenerateDerivative";
    case ErrorCode::CoincidentImages: return "CoincidentImages";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoCrossing: return "NoCrossing";
  }
  return "Unknown";
}

}  // namespace schlicht
