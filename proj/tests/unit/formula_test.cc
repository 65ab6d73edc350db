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

#include <gtest/gtest.h>

#include "fixtures.h"
#include "rdfi/database.h"
#include "rdfi/errors.h"
#include "rdfi/formula.h"

namespace rdfi {
namespace {

using testing::Box;
using testing::Iri;
using testing::Lit;
using testing::Special;
using testing::Var;

Formula Eq(const Term& a, const Term& b) {
  return Formula::Of(Atom::Binary(Rel::kEq, a, b));
}

Term Num(int n) { return Term::Const(Constant(Rational(n))); }

TEST(Formula, SmartConstructorsAbsorbUnits) {
  const Formula a = Eq(Lit("A"), Num(1));
  EXPECT_EQ(Formula::And(a, Formula::True()), a);
  EXPECT_TRUE(Formula::And(a, Formula::False()).is_false());
  EXPECT_EQ(Formula::Or(a, Formula::False()), a);
  EXPECT_TRUE(Formula::Or(a, Formula::True()).is_true());
  EXPECT_EQ(Formula::Not(Formula::Not(a)), a);
  EXPECT_TRUE(Formula::Not(Formula::True()).is_false());
  EXPECT_TRUE(Formula::And({}).is_true());
  EXPECT_TRUE(Formula::Or({}).is_false());
}

TEST(Formula, AndFlattensAndDeduplicates) {
  const Formula a = Eq(Lit("A"), Num(1));
  const Formula b = Eq(Lit("B"), Num(2));
  const Formula nested = Formula::And(a, Formula::And(b, a));
  ASSERT_EQ(nested.kind(), Formula::Kind::kAnd);
  EXPECT_EQ(nested.children().size(), 2u);
  std::vector<Atom> atoms;
  CollectAtoms(nested, atoms);
  EXPECT_EQ(atoms.size(), 2u);
}

TEST(Formula, CollectorsAndSubstitution) {
  const Formula f = Formula::Or(Eq(Lit("A"), Num(1)),
                                Formula::Not(Eq(Lit("B"), Lit("A"))));
  std::set<std::string> lits;
  CollectELiterals(f, lits);
  EXPECT_EQ(lits, (std::set<std::string>{"A", "B"}));
  std::set<Constant> constants;
  CollectConstants(f, constants);
  EXPECT_EQ(constants.size(), 1u);
  const Formula g = SubstituteELiterals(f, {{"A", Constant(Rational(1))}});
  std::set<std::string> left;
  CollectELiterals(g, left);
  EXPECT_EQ(left, std::set<std::string>{"B"});
  const Formula h = ReplaceELiteral(f, "B", Lit("C"));
  std::set<std::string> renamed;
  CollectELiterals(h, renamed);
  EXPECT_EQ(renamed, (std::set<std::string>{"A", "C"}));
}

TEST(Formula, BindVariablesHandlesUnboundAndSyntacticEquality) {
  const Formula same = Formula::Of(Atom::Binary(Rel::kEq, Var("x"), Var("y")));
  EXPECT_TRUE(BindVariables(same, {{Var("x"), Iri("a")}, {Var("y"), Iri("a")}})
                  .is_true());
  EXPECT_TRUE(BindVariables(same, {{Var("x"), Iri("a")}, {Var("y"), Iri("b")}})
                  .is_false());
  // An unbound variable makes the atom false, and its negation true.
  EXPECT_TRUE(BindVariables(same, {{Var("x"), Iri("a")}}).is_false());
  EXPECT_TRUE(
      BindVariables(Formula::Not(same), {{Var("x"), Iri("a")}}).is_true());

  const Formula region =
      Formula::Of(Atom::Binary(Rel::kNTPP, Special("S"), Box(0, 0, 9, 9)));
  const Formula bound = BindVariables(region, {{Special("S"), Lit("R")}});
  EXPECT_EQ(bound, testing::Rcc(Lit("R"), Rel::kNTPP, Box(0, 0, 9, 9)));
  EXPECT_TRUE(BindVariables(region, {{Special("S"), Iri("a")}}).is_false());
}

TEST(Formula, ToStringUsesLanguageSpelling) {
  const Formula f = testing::Rcc(Lit("R1"), Rel::kNTPP, Box(1, 2, 3, 4));
  EXPECT_EQ(FormulaToString(f, Language::kPcl),
            "_e:R1 NTPP \"x >= 1 && x <= 3 && y >= 2 && y <= 4\"");
  const Atom diff{Rel::kLe, Operand(Lit("X")), Operand(Lit("Y")),
                  Operand(Num(-2))};
  EXPECT_EQ(AtomToString(diff, Language::kDiPcl), "_e:X - _e:Y <= -2");
}

TEST(Validate, FormulasMustMatchTheLanguage) {
  const Formula topo = testing::Rcc(Lit("R"), Rel::kDC, Box(0, 0, 1, 1));
  EXPECT_NO_THROW(ValidateFormula(topo, Language::kPcl));
  // Rectangles only have coordinate constraints.
  EXPECT_THROW(ValidateFormula(topo, Language::kRcl), Error);
  try {
    ValidateFormula(topo, Language::kEcl);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLanguageMismatch);
  }
  const Formula order =
      Formula::Of(Atom::Binary(Rel::kLt, Lit("A"), Num(3)));
  EXPECT_NO_THROW(ValidateFormula(order, Language::kDiPcl));
  EXPECT_THROW(ValidateFormula(order, Language::kEcl), Error);
  EXPECT_THROW(ValidateFormula(order, Language::kPcl), Error);
  const Formula fraction = Formula::Of(Atom::Binary(
      Rel::kLt, Lit("A"), Term::Const(Constant(Rational(1, 2)))));
  EXPECT_NO_THROW(ValidateFormula(fraction, Language::kDePcl));
  EXPECT_THROW(ValidateFormula(fraction, Language::kDiPcl), Error);
}

TEST(Database, MakeSortsDeduplicatesAndValidates) {
  const ConditionalTriple t1{{Iri("a"), Iri("p"), Lit("L")}, Formula::True()};
  const ConditionalTriple t2{{Iri("a"), Iri("p"), Iri("b")}, Formula::True()};
  const Database db =
      Database::Make({t1, t2, t1}, Formula::True(), Language::kEcl);
  EXPECT_EQ(db.graph().size(), 2u);
  EXPECT_TRUE(std::is_sorted(db.graph().begin(), db.graph().end()));
  EXPECT_EQ(ELiteralsOf(db), std::set<std::string>{"L"});

  const ConditionalTriple lit_subject{{Lit("L"), Iri("p"), Iri("b")},
                                      Formula::True()};
  try {
    Database::Make({lit_subject}, Formula::True(), Language::kEcl);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllFormedTriple);
  }
  const ConditionalTriple box_object{{Iri("a"), Iri("p"), Box(0, 0, 1, 1)},
                                     Formula::True()};
  try {
    Database::Make({box_object}, Formula::True(), Language::kEcl);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownDatatype);
  }
}

TEST(Database, RectangleLanguageOnlyAcceptsBoxes) {
  const HalfSpace triangle[] = {{-1, 0, 0}, {0, -1, 0}, {1, 1, 4}};
  const Term tri = Term::Const(Constant(Polygon::FromHalfSpaces(triangle)));
  const ConditionalTriple t{{Iri("a"), Iri("p"), tri}, Formula::True()};
  EXPECT_NO_THROW(Database::Make({t}, Formula::True(), Language::kPcl));
  EXPECT_THROW(Database::Make({t}, Formula::True(), Language::kRcl), Error);
}

}  // namespace
}  // namespace rdfi
