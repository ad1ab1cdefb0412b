#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hahn {

enum class ErrorCode {
  DimensionError,
  LevelExceeded,
  NotUpperTriangular,
  BadDiagonal,
  NotIntegral,
  DivisionByZero,
  ConjugationOnRationals,
  UnorderedField,
  DescriptorMismatch,
  MixedDescriptors,
  NotAUnit,
  ZeroToNegativePower,
  ZeroSeries,
  NotOneUnit,
  UnreachableCutoff,
  UnboundedPrecision,
  NotValuationPreserving,
  UnrecognizedFieldAut,
  NotInternal,
  RoundTripMismatch,
  SingularMatrix,
  NotExpandable,
  NonPositiveScale,
  SyntaxError,
  UnknownSuite,
  RootUnavailable,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the literal parsers; offset is the byte position in the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              "at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hahn
