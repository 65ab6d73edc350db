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

#ifndef RDFI_LANGUAGE_H_
#define RDFI_LANGUAGE_H_

#include <optional>
#include <string_view>

namespace rdfi {

// The constraint language fixed for one database.
enum class Language {
  kEcl,    // equality over an infinite domain, integer constants
  kDiPcl,  // difference constraints over the integers
  kDePcl,  // difference constraints over the rationals
  kRcl,    // axis-aligned boxes with coordinate functions
  kPcl,    // RCC-8 over regions with convex polygon landmarks
  kTcl,    // RCC-8 without constants
};

std::string_view LanguageName(Language lang);
std::optional<Language> ParseLanguage(std::string_view name);

inline bool IsDifferenceLanguage(Language lang) {
  return lang == Language::kDiPcl || lang == Language::kDePcl;
}
inline bool IsTopologicalLanguage(Language lang) {
  return lang == Language::kPcl || lang == Language::kTcl;
}

}  // namespace rdfi

#endif  // RDFI_LANGUAGE_H_
