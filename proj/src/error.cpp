#include "octa/error.hpp"

namespace octa {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::NonPositiveDeficit: return "NonPositiveDeficit";
  case ErrorCode::SumNotTwoPi: return "SumNotTwoPi";
  case ErrorCode::DegenerateForm: return "DegenerateForm";
  case ErrorCode::NonPositiveChart: return "NonPositiveChart";
  case ErrorCode::GluingInconsistent: return "GluingInconsistent";
  case ErrorCode::UnknownVertex: return "UnknownVertex";
  case ErrorCode::DegenerateVertices: return "DegenerateVertices";
  case ErrorCode::NotOctahedralHull: return "NotOctahedralHull";
  case ErrorCode::BoundsViolated: return "BoundsViolated";
  case ErrorCode::ZeroArea: return "ZeroArea";
  case ErrorCode::MixedContext: return "MixedContext";
  case ErrorCode::NotTimelikeSeparated: return "NotTimelikeSeparated";
  case ErrorCode::SameWall: return "SameWall";
  case ErrorCode::NegativeCoordinate: return "NegativeCoordinate";
  case ErrorCode::NonPositiveLeadingCoordinate: return "NonPositiveLeadingCoordinate";
  case ErrorCode::BadSampleCount: return "BadSampleCount";
  case ErrorCode::BadTruncation: return "BadTruncation";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::GluingInconsistent:
  case ErrorCode::BoundsViolated:
  case ErrorCode::DegenerateForm:
  case ErrorCode::NotTimelikeSeparated:
  case ErrorCode::NonPositiveLeadingCoordinate:
    return false;
  default:
    return true;
  }
}

} // namespace octa
