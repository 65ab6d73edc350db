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

#include "rdfi/database.h"

#include <algorithm>

#include "rdfi/errors.h"

namespace rdfi {
namespace {

[[noreturn]] void Mismatch(const Atom& a, Language lang,
                           const std::string& why) {
  throw Error(ErrorCode::kLanguageMismatch,
              "atom '" + AtomToString(a, lang) + "' is not a " +
                  std::string(LanguageName(lang)) + " constraint: " + why);
}

void CheckConstant(const Constant& c, Language lang) {
  if (!ConstantFitsLanguage(c, lang)) {
    throw Error(ErrorCode::kUnknownDatatype,
                "constant " + c.ToString() + " is not of the " +
                    std::string(LanguageName(lang)) + " sort");
  }
}

// Operands that denote a value of the language's sort: e-literals, query
// variables, and constants.
bool IsValueOperand(const Operand& o) {
  if (o.is_variable()) return true;
  return o.term().is_eliteral() || o.term().is_constant();
}

bool IsSymbol(const Operand& o) { return o.is_variable() || o.is_eliteral(); }

void CheckNoCoords(const Atom& a, Language lang) {
  if (a.lhs.coord != Coord::kNone || a.rhs.coord != Coord::kNone ||
      (a.sub && a.sub->coord != Coord::kNone)) {
    Mismatch(a, lang, "coordinate functions need boxes");
  }
}

// Symbols of lhs - sub - rhs must form x, -x, or x - y.
void CheckDifferenceShape(const Atom& a, Language lang,
                          bool (*is_symbol)(const Operand&)) {
  int positive = is_symbol(a.lhs) ? 1 : 0;
  int negative = (a.sub && is_symbol(*a.sub) ? 1 : 0) +
                 (is_symbol(a.rhs) ? 1 : 0);
  if (positive + negative > 2 || negative > 1) {
    Mismatch(a, lang, "not a difference constraint");
  }
}

bool IsScalarSymbol(const Operand& o) {
  return o.coord != Coord::kNone && IsSymbol(o);
}

void ValidateEcl(const Atom& a) {
  const Language lang = Language::kEcl;
  if (a.rel != Rel::kEq && a.rel != Rel::kNeq) Mismatch(a, lang, "relation");
  if (a.sub) Mismatch(a, lang, "subtraction");
  CheckNoCoords(a, lang);
  for (const Operand* o : {&a.lhs, &a.rhs}) {
    if (!IsValueOperand(*o)) Mismatch(a, lang, "operand");
    if (o->is_constant()) CheckConstant(o->term().constant(), lang);
  }
}

void ValidateDifference(const Atom& a, Language lang) {
  if (a.rel == Rel::kNeq || IsTopological(a.rel)) {
    Mismatch(a, lang, "relation");
  }
  CheckNoCoords(a, lang);
  for (const Operand* o : {&a.lhs, a.sub ? &*a.sub : nullptr, &a.rhs}) {
    if (o == nullptr) continue;
    if (!IsValueOperand(*o)) Mismatch(a, lang, "operand");
    if (o->is_constant()) CheckConstant(o->term().constant(), lang);
  }
  CheckDifferenceShape(a, lang, IsSymbol);
}

void ValidateRcl(const Atom& a) {
  const Language lang = Language::kRcl;
  if (a.rel == Rel::kNeq || IsTopological(a.rel)) {
    Mismatch(a, lang, "relation");
  }
  const bool any_coord = a.lhs.coord != Coord::kNone ||
                         a.rhs.coord != Coord::kNone ||
                         (a.sub && a.sub->coord != Coord::kNone);
  const bool numeric_constant =
      (a.lhs.is_constant() && a.lhs.term().constant().is_number()) ||
      (a.rhs.is_constant() && a.rhs.term().constant().is_number()) ||
      (a.sub && a.sub->is_constant() && a.sub->term().constant().is_number());
  if (!any_coord && !numeric_constant && !a.sub) {
    // Box equality.
    if (a.rel != Rel::kEq) Mismatch(a, lang, "boxes compare only with EQ");
    for (const Operand* o : {&a.lhs, &a.rhs}) {
      if (!IsValueOperand(*o)) Mismatch(a, lang, "operand");
      if (o->is_constant()) CheckConstant(o->term().constant(), lang);
    }
    return;
  }
  for (const Operand* o : {&a.lhs, a.sub ? &*a.sub : nullptr, &a.rhs}) {
    if (o == nullptr) continue;
    if (!IsValueOperand(*o)) Mismatch(a, lang, "operand");
    if (o->coord == Coord::kNone) {
      if (!o->is_constant() || !o->term().constant().is_number()) {
        Mismatch(a, lang, "boxes need a coordinate function here");
      }
    } else if (o->is_constant()) {
      CheckConstant(o->term().constant(), lang);
    }
  }
  CheckDifferenceShape(a, lang, IsScalarSymbol);
}

void ValidateTopological(const Atom& a, Language lang) {
  if (!IsTopological(a.rel) && a.rel != Rel::kEq) {
    Mismatch(a, lang, "relation");
  }
  if (a.sub) Mismatch(a, lang, "subtraction");
  CheckNoCoords(a, lang);
  for (const Operand* o : {&a.lhs, &a.rhs}) {
    if (!IsValueOperand(*o)) Mismatch(a, lang, "operand");
    if (o->is_constant()) CheckConstant(o->term().constant(), lang);
  }
}

void CheckTerm(const Term& t, Language lang) {
  if (t.is_constant()) CheckConstant(t.constant(), lang);
}

}  // namespace

std::string Triple::ToString() const {
  return subject.ToString() + " " + predicate.ToString() + " " +
         object.ToString() + " .";
}

std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
  if (auto c = a.subject <=> b.subject; c != 0) return c;
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return a.object <=> b.object;
}

bool IsETriple(const Triple& t) {
  return (t.subject.is_iri() || t.subject.is_blank()) && t.predicate.is_iri();
}

std::strong_ordering operator<=>(const ConditionalTriple& a,
                                 const ConditionalTriple& b) {
  if (auto c = a.triple <=> b.triple; c != 0) return c;
  return a.condition <=> b.condition;
}

void ValidateAtom(const Atom& atom, Language lang) {
  switch (lang) {
    case Language::kEcl:
      ValidateEcl(atom);
      return;
    case Language::kDiPcl:
    case Language::kDePcl:
      ValidateDifference(atom, lang);
      return;
    case Language::kRcl:
      ValidateRcl(atom);
      return;
    case Language::kPcl:
    case Language::kTcl:
      ValidateTopological(atom, lang);
      return;
  }
}

void ValidateFormula(const Formula& f, Language lang) {
  std::vector<Atom> atoms;
  CollectAtoms(f, atoms);
  for (const Atom& a : atoms) ValidateAtom(a, lang);
}

void ValidateTriple(const Triple& t, Language lang) {
  if (!IsETriple(t)) {
    throw Error(ErrorCode::kIllFormedTriple,
                "subject must be an IRI or blank node and predicate an IRI: " +
                    t.ToString());
  }
  CheckTerm(t.object, lang);
}

Database Database::Make(std::vector<ConditionalTriple> graph, Formula global,
                        Language language) {
  for (const ConditionalTriple& ct : graph) {
    ValidateTriple(ct.triple, language);
    ValidateFormula(ct.condition, language);
  }
  ValidateFormula(global, language);
  std::set<Variable> vars;
  CollectVariables(global, vars);
  for (const ConditionalTriple& ct : graph) {
    CollectVariables(ct.condition, vars);
  }
  if (!vars.empty()) {
    throw Error(ErrorCode::kLanguageMismatch,
                "query variable " + vars.begin()->ToString() +
                    " in a database constraint");
  }
  std::sort(graph.begin(), graph.end());
  graph.erase(std::unique(graph.begin(), graph.end()), graph.end());
  return Database(std::move(graph), std::move(global), language);
}

std::set<std::string> ELiteralsOf(const Database& db) {
  std::set<std::string> out;
  for (const ConditionalTriple& ct : db.graph()) {
    if (ct.triple.object.is_eliteral()) out.insert(ct.triple.object.text());
    CollectELiterals(ct.condition, out);
  }
  CollectELiterals(db.global(), out);
  return out;
}

}  // namespace rdfi
