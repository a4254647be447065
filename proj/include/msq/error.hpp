// Error taxonomy shared by all msq modules.
#pragma once

#include <stdexcept>
#include <string>

namespace msq {

enum class ErrorCode {
  DimensionMismatch,
  NonFiniteValue,
  BandOutOfRange,
  BandCountMismatch,
  ShapeMismatch,
  ZeroMeasurement,
  EmptyMask,
  ImageTooSmall,
  InvalidInit,
  NonFinite,
  RankOutOfRange,
  SparsityOutOfRange,
  ZeroPeak,
  AllInfinite,
  BadMagic,
  HeaderMismatch,
  TruncatedPayload,
  UnsupportedDataType,
  UnsupportedInterleave,
  HeaderParseError,
  IoFailure,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // True for failures caused by malformed or inconsistent input data, as
  // opposed to numerical breakdown inside a solver.
  bool is_data_error() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace msq
