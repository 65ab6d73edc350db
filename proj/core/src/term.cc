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

#include "rdfi/term.h"

namespace rdfi {

std::string Constant::ToString() const {
  if (is_number()) return FormatRational(number());
  return QuoteString(region().ToString());
}

bool operator==(const Constant& a, const Constant& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.is_number()) return a.number() == b.number();
  return a.region() == b.region();
}

std::strong_ordering operator<=>(const Constant& a, const Constant& b) {
  if (a.value_.index() != b.value_.index()) {
    return a.value_.index() <=> b.value_.index();
  }
  if (a.is_number()) return CompareRational(a.number(), b.number());
  return a.region() <=> b.region();
}

bool ConstantFitsLanguage(const Constant& c, Language lang) {
  switch (lang) {
    case Language::kEcl:
    case Language::kDiPcl:
      return c.is_number() && IsIntegral(c.number());
    case Language::kDePcl:
      return c.is_number();
    case Language::kRcl:
      return c.is_region() && c.region().is_box();
    case Language::kPcl:
      return c.is_region();
    case Language::kTcl:
      return false;
  }
  return false;
}

Term Term::Iri(std::string iri) { return Term(Kind::kIri, std::move(iri)); }

Term Term::Blank(std::string label) {
  return Term(Kind::kBlank, std::move(label));
}

Term Term::PlainLiteral(std::string lexical, std::string datatype) {
  Term t(Kind::kPlainLiteral, std::move(lexical));
  t.datatype_ = std::move(datatype);
  return t;
}

Term Term::Const(Constant c) {
  Term t(Kind::kConstant, "");
  t.constant_ = std::move(c);
  return t;
}

Term Term::ELiteral(std::string name) {
  return Term(Kind::kELiteral, std::move(name));
}

std::string QuoteString(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string Term::ToString() const {
  switch (kind_) {
    case Kind::kIri:
      return "<" + text_ + ">";
    case Kind::kBlank:
      return "_:" + text_;
    case Kind::kPlainLiteral:
      return datatype_.empty() ? QuoteString(text_)
                               : QuoteString(text_) + "^^<" + datatype_ + ">";
    case Kind::kConstant:
      return constant_.ToString();
    case Kind::kELiteral:
      return "_e:" + text_;
  }
  return "";
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Term::Kind::kConstant) return a.constant_ == b.constant_;
  return a.text_ == b.text_ && a.datatype_ == b.datatype_;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ == Term::Kind::kConstant) return a.constant_ <=> b.constant_;
  if (auto c = a.text_ <=> b.text_; c != 0) return c;
  return a.datatype_ <=> b.datatype_;
}

}  // namespace rdfi
