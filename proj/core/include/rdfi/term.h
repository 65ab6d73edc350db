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

#ifndef RDFI_TERM_H_
#define RDFI_TERM_H_

#include <compare>
#include <string>
#include <variant>

#include "rdfi/language.h"
#include "rdfi/polygon.h"
#include "rdfi/rational.h"

namespace rdfi {

// A constraint constant: a number (ECL, diPCL, dePCL) or a region (RCL, PCL).
class Constant {
 public:
  Constant() : value_(Rational(0)) {}
  Constant(Rational r) : value_(std::move(r)) {}  // NOLINT
  Constant(Polygon p) : value_(std::move(p)) {}   // NOLINT

  bool is_number() const { return value_.index() == 0; }
  bool is_region() const { return value_.index() == 1; }
  const Rational& number() const { return std::get<0>(value_); }
  const Polygon& region() const { return std::get<1>(value_); }

  // Numbers print bare; regions print as quoted polygon text.
  std::string ToString() const;

  friend bool operator==(const Constant& a, const Constant& b);
  friend std::strong_ordering operator<=>(const Constant& a,
                                          const Constant& b);

 private:
  std::variant<Rational, Polygon> value_;
};

// Whether c belongs to the sort of the language's constants.
bool ConstantFitsLanguage(const Constant& c, Language lang);

// An RDF term extended with constraint constants and e-literals. The five
// kinds are pairwise disjoint: terms of different kinds never compare equal.
class Term {
 public:
  enum class Kind { kIri, kBlank, kPlainLiteral, kConstant, kELiteral };

  // The empty IRI.
  Term() : kind_(Kind::kIri) {}

  static Term Iri(std::string iri);
  static Term Blank(std::string label);
  static Term PlainLiteral(std::string lexical, std::string datatype = "");
  static Term Const(Constant c);
  static Term ELiteral(std::string name);

  Kind kind() const { return kind_; }
  bool is_iri() const { return kind_ == Kind::kIri; }
  bool is_blank() const { return kind_ == Kind::kBlank; }
  bool is_plain_literal() const { return kind_ == Kind::kPlainLiteral; }
  bool is_constant() const { return kind_ == Kind::kConstant; }
  bool is_eliteral() const { return kind_ == Kind::kELiteral; }

  // IRI text, blank label, lexical form, or e-literal name.
  const std::string& text() const { return text_; }
  // Datatype IRI of a plain literal; empty if untyped.
  const std::string& datatype() const { return datatype_; }
  const Constant& constant() const { return constant_; }

  // <iri>, _:label, "lex" or "lex"^^<dt>, 3 or "polygon", _e:name.
  std::string ToString() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(Kind kind, std::string text) : kind_(kind), text_(std::move(text)) {}

  Kind kind_;
  std::string text_;
  std::string datatype_;
  Constant constant_;
};

// Escapes backslash and double quote.
std::string QuoteString(const std::string& s);

}  // namespace rdfi

#endif  // RDFI_TERM_H_
