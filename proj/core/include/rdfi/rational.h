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

#ifndef RDFI_RATIONAL_H_
#define RDFI_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace rdfi {

// Exact arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;

// Accepts "7", "-7", "5/2", "-0.25". Returns nullopt on malformed input or a
// zero denominator.
std::optional<Rational> ParseRational(std::string_view text);

// Canonical text: "7", "-5/2". Round-trips through ParseRational.
std::string FormatRational(const Rational& r);

bool IsIntegral(const Rational& r);
Rational Floor(const Rational& r);
Rational Ceil(const Rational& r);

inline std::strong_ordering CompareRational(const Rational& a,
                                            const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace rdfi

#endif  // RDFI_RATIONAL_H_
