#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrcount {

enum class ErrorCode {
  ZeroVector,
  DuplicateHyperplane,
  CommonPoint,
  FlatTooSmall,
  TooLarge,
  OutOfTheoremRange,
  OffsetCollision,
  TripleIntersection,
  DuplicateSubtorus,
  Unstable,
  UnsupportedManifold,
  PlacementUnavailable,
  InvalidArgument,
  ParseError,
};

std::string_view error_name(ErrorCode code);

/// Domain error carrying one of the named failure codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arrcount
