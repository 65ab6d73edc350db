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
#include "rdfi/backends.h"
#include "rdfi/difference.h"
#include "rdfi/ecl.h"
#include "rdfi/errors.h"
#include "rdfi/pcl.h"

namespace rdfi {
namespace {

using testing::Box;
using testing::Lit;

Term Num(int n) { return Term::Const(Constant(Rational(n))); }

Atom Bin(Rel rel, const Term& a, const Term& b) {
  return Atom::Binary(rel, a, b);
}

Atom Diff(const Term& x, const Term& y, Rel rel, int c) {
  return Atom{rel, x, y, Num(c)};
}

TEST(Ecl, EqualityClassesAndConstants) {
  EXPECT_TRUE(EclSatisfiable(std::vector<Atom>{
      Bin(Rel::kEq, Lit("A"), Lit("B")), Bin(Rel::kNeq, Lit("B"), Lit("C"))}));
  EXPECT_FALSE(EclSatisfiable(std::vector<Atom>{
      Bin(Rel::kEq, Lit("A"), Num(1)), Bin(Rel::kEq, Lit("B"), Num(2)),
      Bin(Rel::kEq, Lit("A"), Lit("B"))}));
  EXPECT_FALSE(EclSatisfiable(std::vector<Atom>{
      Bin(Rel::kEq, Lit("A"), Lit("B")), Bin(Rel::kNeq, Lit("A"), Lit("B"))}));
  // The domain is infinite, so any number of disequalities is fine.
  EXPECT_TRUE(EclSatisfiable(std::vector<Atom>{
      Bin(Rel::kNeq, Lit("A"), Num(0)), Bin(Rel::kNeq, Lit("A"), Num(1)),
      Bin(Rel::kNeq, Lit("A"), Num(2))}));
}

TEST(Ecl, WitnessAndForcedValues) {
  const std::vector<Atom> atoms{Bin(Rel::kEq, Lit("A"), Num(4)),
                                Bin(Rel::kEq, Lit("B"), Lit("A")),
                                Bin(Rel::kNeq, Lit("C"), Num(4))};
  const auto w = EclWitness(atoms, {"D"});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->at("A"), Constant(Rational(4)));
  EXPECT_EQ(w->at("B"), Constant(Rational(4)));
  EXPECT_NE(w->at("C"), Constant(Rational(4)));
  EXPECT_TRUE(w->count("D"));
  const Valuation forced = EclForcedValues(atoms);
  EXPECT_EQ(forced.size(), 2u);
  EXPECT_FALSE(forced.count("C"));
}

TEST(Difference, NegativeCycleIsUnsatisfiable) {
  const std::vector<Atom> atoms{Diff(Lit("X"), Lit("Y"), Rel::kLe, -1),
                                Diff(Lit("Y"), Lit("Z"), Rel::kLe, -1),
                                Diff(Lit("Z"), Lit("X"), Rel::kLe, 1)};
  EXPECT_FALSE(DiffSatisfiable(LowerDifference(atoms, true)));
  EXPECT_FALSE(DiffSatisfiable(LowerDifference(atoms, false)));
}

TEST(Difference, StrictnessDependsOnTheDomain) {
  // 0 < X < 1 has rational but no integer solutions.
  const std::vector<Atom> atoms{Bin(Rel::kGt, Lit("X"), Num(0)),
                                Bin(Rel::kLt, Lit("X"), Num(1))};
  EXPECT_FALSE(DiffSatisfiable(LowerDifference(atoms, true)));
  const DiffConjunction dense = LowerDifference(atoms, false);
  ASSERT_TRUE(DiffSatisfiable(dense));
  const auto w = DiffWitness(dense);
  ASSERT_TRUE(w);
  EXPECT_GT(w->at("X"), 0);
  EXPECT_LT(w->at("X"), 1);
}

TEST(Difference, ForcedValues) {
  const std::vector<Atom> atoms{Bin(Rel::kGe, Lit("X"), Num(2)),
                                Bin(Rel::kLe, Lit("X"), Num(2)),
                                Diff(Lit("Y"), Lit("X"), Rel::kEq, 3),
                                Bin(Rel::kGe, Lit("Z"), Num(0))};
  const auto forced = DiffForcedValues(LowerDifference(atoms, true));
  EXPECT_EQ(forced.at("X"), Rational(2));
  EXPECT_EQ(forced.at("Y"), Rational(5));
  EXPECT_FALSE(forced.count("Z"));
  // Integer tightening forces 2 < Z < 4 to Z = 3.
  const std::vector<Atom> tight{Bin(Rel::kGt, Lit("Z"), Num(2)),
                                Bin(Rel::kLt, Lit("Z"), Num(4))};
  EXPECT_EQ(DiffForcedValues(LowerDifference(tight, true)).at("Z"),
            Rational(3));
  EXPECT_FALSE(DiffForcedValues(LowerDifference(tight, false)).count("Z"));
}

TEST(Rectangles, CoordinatesAndTopologyLowerToDifferences) {
  const Operand r(Lit("R"));
  // LLx(R) >= 2, URx(R) <= 3, URy(R) - LLy(R) >= 4 and LLy(R) > 0.
  const std::vector<Atom> atoms{
      Atom::Binary(Rel::kGe, r.WithCoord(Coord::kLLx), Num(2)),
      Atom::Binary(Rel::kLe, r.WithCoord(Coord::kURx), Num(3)),
      Atom{Rel::kGe, r.WithCoord(Coord::kURy), r.WithCoord(Coord::kLLy),
           Num(4)},
      Atom::Binary(Rel::kGt, r.WithCoord(Coord::kLLy), Num(0))};
  EXPECT_TRUE(ConjunctionSatisfiable(Language::kRcl, atoms));
  const auto w = ConjunctionWitness(Language::kRcl, atoms, {});
  ASSERT_TRUE(w);
  const Polygon& box = w->at("R").region();
  EXPECT_TRUE(box.is_box());
  EXPECT_GE(box.min_x(), 2);
  EXPECT_LE(box.max_x(), 3);
  EXPECT_GE(box.max_y() - box.min_y(), 4);
  EXPECT_GT(box.min_y(), 0);

  // Every box has positive width.
  const std::vector<Atom> flat{
      Atom::Binary(Rel::kGe, r.WithCoord(Coord::kLLx), Num(2)),
      Atom::Binary(Rel::kLe, r.WithCoord(Coord::kURx), Num(2))};
  EXPECT_FALSE(ConjunctionSatisfiable(Language::kRcl, flat));
  // Box equality fixes all four coordinates.
  const std::vector<Atom> pinned{
      Bin(Rel::kEq, Lit("R"), Box(0, 0, 2, 2)),
      Atom::Binary(Rel::kGt, r.WithCoord(Coord::kURx), Num(2))};
  EXPECT_FALSE(ConjunctionSatisfiable(Language::kRcl, pinned));
}

TEST(Pcl, LandmarksConstrainVariables) {
  const std::vector<Atom> inside{Bin(Rel::kNTPP, Lit("R"), Box(0, 0, 4, 4)),
                                 Bin(Rel::kNTPP, Lit("R"), Box(2, 2, 6, 6))};
  EXPECT_TRUE(PclSatisfiable(inside));
  const std::vector<Atom> apart{Bin(Rel::kNTPP, Lit("R"), Box(0, 0, 1, 1)),
                                Bin(Rel::kNTPP, Lit("R"), Box(5, 5, 6, 6))};
  EXPECT_FALSE(PclSatisfiable(apart));
  const auto w = PclWitness(inside, {});
  ASSERT_TRUE(w);
  EXPECT_EQ(Rcc8Relation(w->at("R").region(), Polygon::Box(0, 0, 4, 4)),
            Rcc8::kNTPP);
  EXPECT_EQ(Rcc8Relation(w->at("R").region(), Polygon::Box(2, 2, 6, 6)),
            Rcc8::kNTPP);
}

TEST(Pcl, ForcedEqualityWithALandmark) {
  const std::vector<Atom> atoms{Bin(Rel::kEq, Lit("R"), Lit("S")),
                                Bin(Rel::kEq, Lit("S"), Box(1, 1, 3, 3))};
  const Valuation forced = PclForcedValues(atoms);
  EXPECT_EQ(forced.at("R"), Constant(Polygon::Box(1, 1, 3, 3)));
}

TEST(Ground, EvaluatesInTheIntendedStructure) {
  EXPECT_TRUE(EvaluateGroundAtom(Diff(Num(5), Num(2), Rel::kEq, 3),
                                 Language::kDiPcl));
  EXPECT_TRUE(EvaluateGroundAtom(
      Bin(Rel::kTPP, Box(0, 0, 1, 1), Box(0, 0, 2, 2)), Language::kPcl));
  EXPECT_FALSE(EvaluateGroundAtom(
      Bin(Rel::kNTPP, Box(0, 0, 1, 1), Box(0, 0, 2, 2)), Language::kPcl));
  EXPECT_TRUE(EvaluateGround(
      Formula::Not(Formula::Of(Bin(Rel::kNeq, Num(1), Num(1)))),
      Language::kEcl));
}

}  // namespace
}  // namespace rdfi
