#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace octa {

enum class ErrorCode {
  NonPositiveDeficit,
  SumNotTwoPi,
  DegenerateForm,
  NonPositiveChart,
  GluingInconsistent,
  UnknownVertex,
  DegenerateVertices,
  NotOctahedralHull,
  BoundsViolated,
  ZeroArea,
  MixedContext,
  NotTimelikeSeparated,
  SameWall,
  NegativeCoordinate,
  NonPositiveLeadingCoordinate,
  BadSampleCount,
  BadTruncation,
};

/// Machine-readable name, e.g. "SumNotTwoPi".
std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that indicate bad caller input rather than a numeric or
/// internal failure.
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace octa
