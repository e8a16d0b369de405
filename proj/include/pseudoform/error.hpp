#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pseudoform {

/// Domain error kinds surfaced by the library. The CLI reports these verbatim.
enum class ErrorCode {
  DuplicateVertexInFacet,
  FaceNotPresent,
  VertexNotPresent,
  SizeLimitExceeded,
  NotPure,
  NotPseudomanifold,
  NotASurface,
  NotNormal,
  NotACircleInSurface,
  NotAFacet,
  NotAdmissible,
  NotMissing,
  VerdictMismatch,
  NormalityViolation,
  AnnulusCaseUnsupported,
  MissingCoordinate,
  HypothesisNotMet,
  CodimTooSmall,
  DecompositionStuck,
  EmptyMultiset,
  SearchExhausted,
  G2Mismatch,
  StructureViolation,
  BadParameters,
  PostconditionFailed,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorCode::FaceNotPresent: return "FaceNotPresent";
    case ErrorCode::VertexNotPresent: return "VertexNotPresent";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotACircleInSurface: return "NotACircleInSurface";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotMissing: return "NotMissing";
    case ErrorCode::VerdictMismatch: return "VerdictMismatch";
    case ErrorCode::NormalityViolation: return "NormalityViolation";
    case ErrorCode::AnnulusCaseUnsupported: return "AnnulusCaseUnsupported";
    case ErrorCode::MissingCoordinate: return "MissingCoordinate";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::CodimTooSmall: return "CodimTooSmall";
    case ErrorCode::DecompositionStuck: return "DecompositionStuck";
    case ErrorCode::EmptyMultiset: return "EmptyMultiset";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::G2Mismatch: return "G2Mismatch";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::PostconditionFailed: return "PostconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

// Internal consistency check for the postconditions every construction asserts.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::PostconditionFailed, what);
}

}  // namespace detail
}  // namespace pseudoform
