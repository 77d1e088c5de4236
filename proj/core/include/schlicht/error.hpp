#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schlicht {

enum class ErrorCode {
  InvalidArgument,
  ZeroConstantTerm,
  BranchCut,
  NonzeroInnerConstant,
  DegenerateRadius,
  UnknownId,
  BadParams,
  EvaluationFailure,
  OutsideDisk,
  PoleOfPsi,
  DegenerateDerivative,
  CoincidentImages,
  DimensionMismatch,
  NoCrossing,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; every public operation of the
/// library reports failures through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace schlicht
