#include "polyspace/error.hpp"

namespace polyspace {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonUnitary: return "NonUnitary";
    case ErrorCode::ZeroPolygon: return "ZeroPolygon";
    case ErrorCode::TooManySides: return "TooManySides";
    case ErrorCode::DimensionOne: return "DimensionOne";
    case ErrorCode::DependentColumns: return "DependentColumns";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::LeftProdigalRegion: return "LeftProdigalRegion";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::NotInHypersimplex: return "NotInHypersimplex";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace polyspace
