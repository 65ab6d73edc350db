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
#include "rdfi/errors.h"
#include "rdfi/oracle.h"

namespace rdfi {
namespace {

using testing::Box;
using testing::Iri;
using testing::Lit;
using testing::Special;
using testing::Var;

Term Num(int n) { return Term::Const(Constant(Rational(n))); }

Formula Eq(const Term& a, const Term& b) {
  return Formula::Of(Atom::Binary(Rel::kEq, a, b));
}

Database TwoLiterals() {
  return Database::Make(
      {{{Iri("a"), Iri("p"), Lit("L")}, Formula::True()},
       {{Iri("a"), Iri("q"), Lit("M")}, Eq(Lit("M"), Num(1))}},
      Formula::Not(Eq(Lit("L"), Lit("M"))), Language::kEcl);
}

TEST(Valuations, EnumerationRespectsTheGlobalConstraint) {
  const DomainSpec dom{{"L", {Constant(Rational(1)), Constant(Rational(2))}},
                       {"M", {Constant(Rational(1)), Constant(Rational(2))}}};
  const std::vector<Valuation> vals = EnumerateValuations(TwoLiterals(), dom);
  EXPECT_EQ(vals.size(), 2u);
  const std::vector<World> worlds = EnumerateWorlds(TwoLiterals(), dom);
  const std::vector<World> expected{
      {{Iri("a"), Iri("p"), Num(1)}},
      {{Iri("a"), Iri("p"), Num(2)}, {Iri("a"), Iri("q"), Num(1)}}};
  EXPECT_EQ(worlds, expected);
}

TEST(Valuations, DomainErrors) {
  const DomainSpec missing{{"L", {Constant(Rational(1))}}};
  try {
    EnumerateValuations(TwoLiterals(), missing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingDomain);
  }
  const DomainSpec wrong_sort{
      {"L", {Constant(Polygon::Box(0, 0, 1, 1))}},
      {"M", {Constant(Rational(1))}}};
  try {
    EnumerateValuations(TwoLiterals(), wrong_sort);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLanguageMismatch);
  }
  const DomainSpec no_world{{"L", {Constant(Rational(1))}},
                            {"M", {Constant(Rational(1))}}};
  try {
    EnumerateWorlds(TwoLiterals(), no_world);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyWorldSet);
  }
}

TEST(StandardSemantics, PatternsOverAGroundGraph) {
  const World g{{Iri("a"), Iri("p"), Iri("b")},
                {Iri("b"), Iri("q"), Iri("c")},
                {Iri("a"), Iri("p"), Num(4)}};
  const GraphPattern ab = GraphPattern::Triple({Var("x"), Iri("p"), Var("y")});
  const GraphPattern bc = GraphPattern::Triple({Var("y"), Iri("q"), Var("z")});
  const std::set<Binding> opt =
      StdEvalPattern(GraphPattern::Opt(ab, bc), g, Language::kEcl);
  const std::set<Binding> expected{
      {{Var("x"), Iri("a")}, {Var("y"), Iri("b")}, {Var("z"), Iri("c")}}};
  EXPECT_EQ(opt, expected);
  const GraphPattern special =
      GraphPattern::Triple({Var("x"), Iri("p"), Special("s")});
  const std::set<Binding> numbers = StdEvalPattern(
      GraphPattern::Filter(special, Formula::Of(Atom::Binary(
                                        Rel::kEq, Special("s"), Num(4)))),
      g, Language::kEcl);
  EXPECT_EQ(numbers, (std::set<Binding>{
                         {{Var("x"), Iri("a")}, {Special("s"), Num(4)}}}));
}

TEST(Oracle, HotspotCertainAnswers) {
  const DomainSpec dom = testing::HotspotDomain();
  const Database db = testing::HotspotDatabase();
  EXPECT_EQ(OracleCertainConstruct(
                testing::FireInBoxConstruct(Box(2, 4, 28, 22)), db, dom),
            (World{{Iri("fire1"), Iri("type"), Iri("Fire")}}));
  EXPECT_TRUE(OracleCertainConstruct(
                  testing::FireInBoxConstruct(Box(10, 12, 21, 17)), db, dom)
                  .empty());
}

TEST(Oracle, RestrictToDomainLimitsValuations) {
  const DomainSpec dom{{"L", {Constant(Rational(1)), Constant(Rational(2))}},
                       {"M", {Constant(Rational(1)), Constant(Rational(2))}}};
  const Database restricted = RestrictToDomain(TwoLiterals(), dom);
  EXPECT_EQ(EnumerateWorlds(restricted, dom), EnumerateWorlds(TwoLiterals(), dom));
  std::set<std::string> lits;
  CollectELiterals(restricted.global(), lits);
  EXPECT_EQ(lits, (std::set<std::string>{"L", "M"}));
}

TEST(Worlds, CoinitialityAndIntersection) {
  const Triple abc{Iri("a"), Iri("b"), Iri("c")};
  const Triple aed{Iri("a"), Iri("e"), Iri("d")};
  EXPECT_TRUE(Coinitial({{abc}}, {{abc, aed}, {abc}}));
  EXPECT_FALSE(Coinitial({{abc, aed}}, {{abc}}));
  EXPECT_EQ(Intersection({{abc, aed}, {abc}}), World{abc});
  EXPECT_TRUE(Intersection({}).empty());
}

}  // namespace
}  // namespace rdfi
