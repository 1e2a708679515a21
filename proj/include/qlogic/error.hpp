// Copyright 2026 The qlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlogic {

enum class ErrorCode {
  DimMismatch,
  BadDimension,
  BadSubspace,
  BadWire,
  ParseError,
  NotSubspaceConfined,
  NotUnitary,
  ReconstructionFailed,
  TooLarge,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadSubspace: return "BadSubspace";
    case ErrorCode::BadWire: return "BadWire";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSubspaceConfined: return "NotSubspaceConfined";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qlogic
