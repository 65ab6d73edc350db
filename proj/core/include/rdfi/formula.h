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

#ifndef RDFI_FORMULA_H_
#define RDFI_FORMULA_H_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rdfi/language.h"
#include "rdfi/term.h"

namespace rdfi {

// A query variable. Special variables (written ?name!s) range over
// constraint constants and e-literals; normal ones over IRIs, blank nodes and
// plain literals.
struct Variable {
  std::string name;
  bool special = false;

  std::string ToString() const {
    return "?" + name + (special ? "!s" : "");
  }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using Binding = std::map<Variable, Term>;
using Valuation = std::map<std::string, Constant>;

// Box coordinate selectors of the rectangle language.
enum class Coord : uint8_t { kNone, kLLx, kLLy, kURx, kURy };

enum class Rel : uint8_t {
  kEq,
  kNeq,
  kLt,
  kLe,
  kGt,
  kGe,
  kDC,
  kEC,
  kPO,
  kTPP,
  kNTPP,
};

bool IsTopological(Rel r);
bool IsOrder(Rel r);  // < <= > >=

struct Operand {
  std::variant<Term, Variable> ref;
  Coord coord = Coord::kNone;

  Operand() : ref(Term::Iri("")) {}
  Operand(Term t, Coord c = Coord::kNone) : ref(std::move(t)), coord(c) {}  // NOLINT
  Operand(Variable v, Coord c = Coord::kNone)  // NOLINT
      : ref(std::move(v)), coord(c) {}

  bool is_term() const { return ref.index() == 0; }
  bool is_variable() const { return ref.index() == 1; }
  const Term& term() const { return std::get<0>(ref); }
  const Variable& variable() const { return std::get<1>(ref); }
  bool is_eliteral() const { return is_term() && term().is_eliteral(); }
  bool is_constant() const { return is_term() && term().is_constant(); }

  Operand WithCoord(Coord c) const {
    Operand out = *this;
    out.coord = c;
    return out;
  }

  friend bool operator==(const Operand&, const Operand&) = default;
  friend std::strong_ordering operator<=>(const Operand& a, const Operand& b);
};

// lhs [- sub] rel rhs. Difference atoms use sub; the others leave it empty.
struct Atom {
  Rel rel = Rel::kEq;
  Operand lhs;
  std::optional<Operand> sub;
  Operand rhs;

  static Atom Binary(Rel rel, Operand lhs, Operand rhs) {
    return Atom{rel, std::move(lhs), std::nullopt, std::move(rhs)};
  }

  // Whether no operand is an e-literal or a variable.
  bool IsGround() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

// An immutable Boolean combination of atoms. The smart constructors keep a
// light canonical shape: And/Or are flattened and deduplicated, true/false
// are absorbed, and double negation is removed.
class Formula {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr };

  Formula();  // true

  static Formula True();
  static Formula False();
  static Formula Of(Atom atom);
  static Formula Not(Formula f);
  static Formula And(std::vector<Formula> children);
  static Formula Or(std::vector<Formula> children);
  static Formula And(Formula a, Formula b) {
    return And(std::vector<Formula>{std::move(a), std::move(b)});
  }
  static Formula Or(Formula a, Formula b) {
    return Or(std::vector<Formula>{std::move(a), std::move(b)});
  }
  // a implies b, as !a || b.
  static Formula Implies(Formula a, Formula b);
  static Formula Conjunction(std::span<const Atom> atoms);

  Kind kind() const { return node_->kind; }
  bool is_true() const { return kind() == Kind::kTrue; }
  bool is_false() const { return kind() == Kind::kFalse; }
  const Atom& atom() const { return node_->atom; }
  const std::vector<Formula>& children() const { return node_->children; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    Atom atom;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Kind kind, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

std::string AtomToString(const Atom& atom, Language lang);
std::string FormulaToString(const Formula& f, Language lang);

// Collectors; results are added to the output set.
void CollectELiterals(const Formula& f, std::set<std::string>& out);
void CollectConstants(const Formula& f, std::set<Constant>& out);
void CollectVariables(const Formula& f, std::set<Variable>& out);
void CollectAtoms(const Formula& f, std::vector<Atom>& out);

// Replaces e-literals named in v by their constants.
Formula SubstituteELiterals(const Formula& f, const Valuation& v);
Atom SubstituteELiterals(const Atom& a, const Valuation& v);

// Replaces every occurrence of the e-literal by the term.
Formula ReplaceELiteral(const Formula& f, const std::string& name,
                        const Term& replacement);

// Binds query variables for FILTER evaluation. An atom mentioning an unbound
// variable, or applying a constraint predicate to a term that is not a
// constraint constant or e-literal, becomes false. EQ and != between two terms
// that are neither constants nor e-literals are decided syntactically.
Formula BindVariables(const Formula& f, const Binding& binding);

}  // namespace rdfi

#endif  // RDFI_FORMULA_H_
