/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace gosvm {

enum class ErrorCode {
  Parse = 1,
  Io,
  DimensionMismatch,
  InsufficientData,
  MissingOracle,
  EmptyClass,
  DegenerateData,
  DuplicateOracle,
  TooLarge,
  InvalidIntervals,
  NonPositiveWeight,
  InfeasibleNu,
  InfeasibleParams,
  InvalidConfig,
  SeriesTooShort,
  MissingExtendedSet,
  IllConditioned,
  VerificationFailed,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::MissingOracle: return "MissingOracle";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::DuplicateOracle: return "DuplicateOracle";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidIntervals: return "InvalidIntervals";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::InfeasibleNu: return "InfeasibleNu";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::MissingExtendedSet: return "MissingExtendedSet";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace gosvm
