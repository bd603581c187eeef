#pragma once

#include <stdexcept>
#include <string>

namespace wc {

enum class ErrorCode {
  VertexOutOfRange,
  LoopEdge,
  NTooLarge,
  MalformedGraph6,
  EmptySet,
  SizeMismatch,
  IllegalInterchange,
  PositionOutOfRange,
  NotAnEdge,
  PreconditionViolated,
  DivisionNotExact,
  BudgetExceeded,
  FPureBudgetExceeded,
  Disconnected,
  InvalidInput,
};

/// Library-wide exception carrying a machine-readable code.
/// Vertex names in messages are 1-based.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::IllegalInterchange: return "IllegalInterchange";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DivisionNotExact: return "DivisionNotExact";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FPureBudgetExceeded: return "FPureBudgetExceeded";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace wc
