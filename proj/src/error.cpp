#include "hahn/error.hpp"

namespace hahn {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::LevelExceeded: return "LevelExceeded";
    case ErrorCode::NotUpperTriangular: return "NotUpperTriangular";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ConjugationOnRationals: return "ConjugationOnRationals";
    case ErrorCode::UnorderedField: return "UnorderedField";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::MixedDescriptors: return "MixedDescriptors";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::ZeroToNegativePower: return "ZeroToNegativePower";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::NotOneUnit: return "NotOneUnit";
    case ErrorCode::UnreachableCutoff: return "UnreachableCutoff";
    case ErrorCode::UnboundedPrecision: return "UnboundedPrecision";
    case ErrorCode::NotValuationPreserving: return "NotValuationPreserving";
    case ErrorCode::UnrecognizedFieldAut: return "UnrecognizedFieldAut";
    case ErrorCode::NotInternal: return "NotInternal";
    case ErrorCode::RoundTripMismatch: return "RoundTripMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotExpandable: return "NotExpandable";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::RootUnavailable: return "RootUnavailable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace hahn
