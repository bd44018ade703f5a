#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grunbaum {

enum class ErrorCode {
  LoopEdge,
  ParallelEdge,
  AsymmetricAdjacency,
  Disconnected,
  InvalidVertex,
  NotACycle,
  SideNotADisk,
  FaceNotTriangle,
  NotTriangulation,
  ColoringIncomplete,
  InvalidColor,
  ImproperVertexColoring,
  SeedNotInColors,
  MixedTriple,
  BadParity,
  NotARefinement,
  NotAGridLabeling,
  NoTableEntry,
  ClassificationAnomaly,
  NotSimple,
  UnknownId,
  ParseError,
  PreconditionViolation,
  BudgetExceeded,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::ParallelEdge: return "ParallelEdge";
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::SideNotADisk: return "SideNotADisk";
    case ErrorCode::FaceNotTriangle: return "FaceNotTriangle";
    case ErrorCode::NotTriangulation: return "NotTriangulation";
    case ErrorCode::ColoringIncomplete: return "ColoringIncomplete";
    case ErrorCode::InvalidColor: return "InvalidColor";
    case ErrorCode::ImproperVertexColoring: return "ImproperVertexColoring";
    case ErrorCode::SeedNotInColors: return "SeedNotInColors";
    case ErrorCode::MixedTriple: return "MixedTriple";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::NotARefinement: return "NotARefinement";
    case ErrorCode::NotAGridLabeling: return "NotAGridLabeling";
    case ErrorCode::NoTableEntry: return "NoTableEntry";
    case ErrorCode::ClassificationAnomaly: return "ClassificationAnomaly";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace grunbaum
