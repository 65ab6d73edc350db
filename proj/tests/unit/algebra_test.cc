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
#include "rdfi/algebra.h"
#include "rdfi/constraint.h"
#include "rdfi/errors.h"

namespace rdfi {
namespace {

using testing::Box;
using testing::Iri;
using testing::Lit;
using testing::Rcc;
using testing::SampleMapping;
using testing::Special;
using testing::Var;

const Language kPcl = Language::kPcl;

Database Simple() {
  const ConditionalTriple t1{{Iri("a"), Iri("p"), Iri("b")}, Formula::True()};
  const ConditionalTriple t2{{Iri("b"), Iri("q"), Iri("c")}, Formula::True()};
  const ConditionalTriple t3{{Iri("a"), Iri("p"), Lit("L")},
                             Rcc(Lit("L"), Rel::kDC, Box(0, 0, 1, 1))};
  return Database::Make({t1, t2, t3}, Formula::True(), kPcl);
}

Formula VarRcc(const Variable& v, Rel rel, const Term& t) {
  return Formula::Of(Atom::Binary(rel, v, t));
}

GraphPattern Tp(PatternTerm s, PatternTerm p, PatternTerm o) {
  return GraphPattern::Triple({std::move(s), std::move(p), std::move(o)});
}

TEST(Mappings, CompatibilityIsSymmetric) {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      EXPECT_EQ(Compatible(SampleMapping(i), SampleMapping(j)),
                Compatible(SampleMapping(j), SampleMapping(i)));
    }
  }
}

TEST(Mappings, JoinOfIncompatibleButPossiblyCompatibleAddsEqualities) {
  const ConditionalMapping j = Join(SampleMapping(1), SampleMapping(2));
  std::vector<Atom> atoms;
  CollectAtoms(j.condition, atoms);
  EXPECT_NE(std::find(atoms.begin(), atoms.end(),
                      Atom::Binary(Rel::kEq, Lit("R1"), Box(1, 1, 2, 2))),
            atoms.end());
}

TEST(Mappings, JoinRejectsIncompatibleIris) {
  const ConditionalMapping a{{{Var("x"), Iri("a")}}, Formula::True()};
  const ConditionalMapping b{{{Var("x"), Iri("b")}}, Formula::True()};
  EXPECT_FALSE(PossiblyCompatible(a, b));
  EXPECT_THROW(Join(a, b), Error);
}

TEST(Mappings, AddMappingKeepsStructurallyDistinctMembers) {
  MappingSet set;
  const Binding b{{Var("x"), Iri("a")}};
  AddMapping(set, {b, Rcc(Lit("L"), Rel::kDC, Box(0, 0, 1, 1))});
  AddMapping(set, {b, Rcc(Lit("L"), Rel::kDC, Box(0, 0, 1, 1))});
  AddMapping(set, {b, Rcc(Lit("L"), Rel::kEC, Box(0, 0, 1, 1))});
  EXPECT_EQ(set.size(), 2u);
  AddMapping(set, {b, Formula::False()});
  EXPECT_EQ(set.size(), 2u);
}

TEST(Evaluation, TriplePatternMatchesUpToConditions) {
  const MappingSet got = EvalPattern(Tp(Iri("a"), Iri("p"), Var("x")), Simple());
  const MappingSet expected{{{{Var("x"), Iri("b")}}, Formula::True()}};
  EXPECT_EQ(got, expected);
  const MappingSet special =
      EvalPattern(Tp(Iri("a"), Iri("p"), Special("s")), Simple());
  ASSERT_EQ(special.size(), 1u);
  EXPECT_EQ(special.begin()->binding.at(Special("s")), Lit("L"));
}

TEST(Evaluation, ConstantObjectsMatchELiteralsConditionally) {
  const MappingSet got =
      EvalPattern(Tp(Var("s"), Iri("p"), Box(5, 5, 6, 6)), Simple());
  ASSERT_EQ(got.size(), 1u);
  EXPECT_TRUE(testing::Equivalent(
      got.begin()->condition,
      Formula::And(Rcc(Lit("L"), Rel::kDC, Box(0, 0, 1, 1)),
                   Rcc(Lit("L"), Rel::kEq, Box(5, 5, 6, 6))),
      kPcl));
  // Inside the excluded region the condition is unsatisfiable.
  const MappingSet excluded =
      EvalPattern(Tp(Var("s"), Iri("p"), Box(0, 0, 1, 1)), Simple());
  for (const ConditionalMapping& m : excluded) {
    EXPECT_FALSE(Satisfiable(m.condition, kPcl));
  }
}

TEST(Evaluation, AndUnionOpt) {
  const GraphPattern ab = Tp(Var("x"), Iri("p"), Var("y"));
  const GraphPattern bc = Tp(Var("y"), Iri("q"), Var("z"));
  const MappingSet joined = EvalPattern(GraphPattern::And(ab, bc), Simple());
  const MappingSet expected_join{
      {{{Var("x"), Iri("a")}, {Var("y"), Iri("b")}, {Var("z"), Iri("c")}},
       Formula::True()}};
  EXPECT_EQ(joined, expected_join);

  const MappingSet unioned = EvalPattern(GraphPattern::Union(ab, bc), Simple());
  EXPECT_EQ(unioned.size(), 2u);

  const GraphPattern cq = Tp(Var("y"), Iri("r"), Var("w"));
  const MappingSet opt = EvalPattern(GraphPattern::Opt(ab, cq), Simple());
  const MappingSet expected_opt{
      {{{Var("x"), Iri("a")}, {Var("y"), Iri("b")}}, Formula::True()}};
  EXPECT_EQ(opt, expected_opt);
}

TEST(Evaluation, DifferenceOfIdenticalTermsIsEmpty) {
  const ConditionalMapping m{{{Var("x"), Iri("a")}}, Formula::True()};
  EXPECT_TRUE(DiffSets({m}, {m}).empty());
}

TEST(Evaluation, FilterSplitsDisjunctionsIntoMappings) {
  const GraphPattern p = GraphPattern::Filter(
      Tp(Iri("a"), Iri("p"), Special("s")),
      Formula::Or(VarRcc(Special("s"), Rel::kEC, Box(0, 0, 1, 1)),
                  VarRcc(Special("s"), Rel::kPO, Box(0, 0, 1, 1))));
  const MappingSet got = EvalPattern(p, Simple());
  EXPECT_EQ(got.size(), 2u);
  std::vector<Formula> disjuncts;
  for (const ConditionalMapping& m : got) disjuncts.push_back(m.condition);
  EXPECT_TRUE(testing::Equivalent(
      Formula::Or(disjuncts),
      Formula::And(Rcc(Lit("L"), Rel::kDC, Box(0, 0, 1, 1)),
                   Formula::Or(Rcc(Lit("L"), Rel::kEC, Box(0, 0, 1, 1)),
                               Rcc(Lit("L"), Rel::kPO, Box(0, 0, 1, 1)))),
      kPcl));
  // The filter contradicts the triple condition.
  const GraphPattern q = GraphPattern::Filter(
      Tp(Iri("a"), Iri("p"), Special("s")),
      VarRcc(Special("s"), Rel::kNTPP, Box(0, 0, 1, 1)));
  for (const ConditionalMapping& m : EvalPattern(q, Simple())) {
    EXPECT_FALSE(Satisfiable(m.condition, kPcl));
  }
}

TEST(Evaluation, FilterOnUnboundVariableIsFalse) {
  const GraphPattern p = GraphPattern::Filter(
      Tp(Iri("a"), Iri("p"), Var("x")),
      Formula::Of(Atom::Binary(Rel::kEq, Var("x"), Var("unbound"))));
  EXPECT_TRUE(EvalPattern(p, Simple()).empty());
}

TEST(Subsumption, BindingsAndSets) {
  const Binding small{{Var("x"), Iri("a")}};
  const Binding big{{Var("x"), Iri("a")}, {Var("y"), Iri("b")}};
  EXPECT_TRUE(Subsumes(small, big));
  EXPECT_FALSE(Subsumes(big, small));
  EXPECT_TRUE(SetSubsumed({small}, {big}));
  EXPECT_FALSE(SetSubsumed({big}, {small}));
  EXPECT_TRUE(SetSubsumed({}, {small}));
}

TEST(Restrict, DropsUnprojectedVariables) {
  const ConditionalMapping m{{{Var("x"), Iri("a")}, {Var("y"), Iri("b")}},
                             Formula::True()};
  const ConditionalMapping r = Restrict(m, {Var("x")});
  EXPECT_EQ(r.binding, (Binding{{Var("x"), Iri("a")}}));
}

}  // namespace
}  // namespace rdfi
