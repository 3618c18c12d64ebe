#pragma once

#include <stdexcept>
#include <string>

namespace surftutte {

enum class ErrorCode {
  MalformedPermutation,
  AlphaNotInvolution,
  DanglingDart,
  MalformedInput,
  InternalEulerParity,
  EdgeNotInGraph,
  LoopContraction,
  NotSpanning,
  NotCellulation,
  NonLaurentResult,
  TooManyEdges,
  DimensionMismatch,
  RadicalNotBoundaries,
  NotFourValent,
  OverPairNotOpposite,
  TooManyCrossings,
  MissingOrientation,
  NotAlternating,
  NotCheckerboardColorable,
  ReservedWeightName,
};

const char* error_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (notably the CLI) can map input problems to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedPermutation: return "MalformedPermutation";
    case ErrorCode::AlphaNotInvolution: return "AlphaNotInvolution";
    case ErrorCode::DanglingDart: return "DanglingDart";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::InternalEulerParity: return "InternalEulerParity";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::LoopContraction: return "LoopContraction";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::NotCellulation: return "NotCellulation";
    case ErrorCode::NonLaurentResult: return "NonLaurentResult";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RadicalNotBoundaries: return "RadicalNotBoundaries";
    case ErrorCode::NotFourValent: return "NotFourValent";
    case ErrorCode::OverPairNotOpposite: return "OverPairNotOpposite";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::MissingOrientation: return "MissingOrientation";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotCheckerboardColorable: return "NotCheckerboardColorable";
    case ErrorCode::ReservedWeightName: return "ReservedWeightName";
  }
  return "Unknown";
}

}  // namespace surftutte
