// Copyright 2026 The RDFi Authors
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

#ifndef RDFI_ERRORS_H_
#define RDFI_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdfi {

enum class ErrorCode {
  kIllFormedTriple,
  kLanguageMismatch,
  kUnknownDatatype,
  kDegeneratePolygon,
  kNotClosed,
  kUnsatGlobal,
  kNotPossiblyCompatible,
  kNotAfoFragment,
  kUnsupportedFragment,
  kEmptyWorldSet,
  kMissingDomain,
  kNoWitness,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorCode::kParse, std::to_string(line) + ":" +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace rdfi

#endif  // RDFI_ERRORS_H_
