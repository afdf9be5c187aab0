#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gedsim {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  UnknownLabel,
  DanglingEndpoint,
  UnknownNode,
  InvalidSize,
  MissingPayload,
  MatrixShape,
  NonSquare,
  NegativeEntry,
  DimensionMismatch,
  UnsupportedCostModel,
  AlphabetMismatch,
  LpNumericalFailure,
  InfeasibleFixings,
  DivisionByZeroGed,
  NonIntegralSolution,
  TooLarge,
  XmlMalformed,
  MissingLabelAttr,
  DirectedUnsupported,
  SchemaViolation,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::MissingPayload: return "MissingPayload";
    case ErrorCode::MatrixShape: return "MatrixShape";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedCostModel: return "UnsupportedCostModel";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::LpNumericalFailure: return "LpNumericalFailure";
    case ErrorCode::InfeasibleFixings: return "InfeasibleFixings";
    case ErrorCode::DivisionByZeroGed: return "DivisionByZeroGed";
    case ErrorCode::NonIntegralSolution: return "NonIntegralSolution";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::XmlMalformed: return "XmlMalformed";
    case ErrorCode::MissingLabelAttr: return "MissingLabelAttr";
    case ErrorCode::DirectedUnsupported: return "DirectedUnsupported";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gedsim
