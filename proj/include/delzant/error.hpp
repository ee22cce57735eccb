#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace delzant {

enum class ErrorCode {
  ZeroVector,
  NotUnimodular,
  DimensionMismatch,
  NotSimple,
  NotSmooth,
  Unbounded,
  Empty,
  DuplicateFacet,
  RedundantFacet,
  NonPrimitiveNormal,
  InvalidSubspace,
  NotInterior,
  OnExcludedFacet,
  NoConvergence,
  PoleAtBoundary,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code; the
/// message is the human-readable form printed by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace delzant
