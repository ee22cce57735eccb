#include "delzant/error.hpp"

namespace delzant {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::DuplicateFacet: return "DuplicateFacet";
    case ErrorCode::RedundantFacet: return "RedundantFacet";
    case ErrorCode::NonPrimitiveNormal: return "NonPrimitiveNormal";
    case ErrorCode::InvalidSubspace: return "InvalidSubspace";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::OnExcludedFacet: return "OnExcludedFacet";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::PoleAtBoundary: return "PoleAtBoundary";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace delzant
