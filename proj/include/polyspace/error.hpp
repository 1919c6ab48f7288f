#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace polyspace {

enum class ErrorCode {
  NonUnitary,
  ZeroPolygon,
  TooManySides,
  DimensionOne,
  DependentColumns,
  NotNormalized,
  NotClosed,
  NotHermitian,
  ZeroDiagonal,
  NotTangent,
  LeftProdigalRegion,
  DegeneratePair,
  EmptyPolytope,
  Degenerate,
  NonGeneric,
  NotInHypersimplex,
  TriangleViolation,
  InvalidArgument,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library. `index()` carries the offending
/// edge/diagonal/triangle index for the codes that have one (1-based where
/// the math is 1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<int> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<int> index_;
};

}  // namespace polyspace
