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

#include "rdfi/language.h"

#include "rdfi/errors.h"

namespace rdfi {

std::string_view LanguageName(Language lang) {
  switch (lang) {
    case Language::kEcl:
      return "ecl";
    case Language::kDiPcl:
      return "dipcl";
    case Language::kDePcl:
      return "depcl";
    case Language::kRcl:
      return "rcl";
    case Language::kPcl:
      return "pcl";
    case Language::kTcl:
      return "tcl";
  }
  return "?";
}

std::optional<Language> ParseLanguage(std::string_view name) {
  for (Language l : {Language::kEcl, Language::kDiPcl, Language::kDePcl,
                     Language::kRcl, Language::kPcl, Language::kTcl}) {
    if (LanguageName(l) == name) return l;
  }
  return std::nullopt;
}

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIllFormedTriple:
      return "IllFormedTriple";
    case ErrorCode::kLanguageMismatch:
      return "LanguageMismatch";
    case ErrorCode::kUnknownDatatype:
      return "UnknownDatatype";
    case ErrorCode::kDegeneratePolygon:
      return "DegeneratePolygon";
    case ErrorCode::kNotClosed:
      return "NotClosed";
    case ErrorCode::kUnsatGlobal:
      return "UnsatGlobal";
    case ErrorCode::kNotPossiblyCompatible:
      return "NotPossiblyCompatible";
    case ErrorCode::kNotAfoFragment:
      return "NotAfoFragment";
    case ErrorCode::kUnsupportedFragment:
      return "UnsupportedFragment";
    case ErrorCode::kEmptyWorldSet:
      return "EmptyWorldSet";
    case ErrorCode::kMissingDomain:
      return "MissingDomain";
    case ErrorCode::kNoWitness:
      return "NoWitness";
    case ErrorCode::kParse:
      return "ParseError";
  }
  return "Error";
}

}  // namespace rdfi
