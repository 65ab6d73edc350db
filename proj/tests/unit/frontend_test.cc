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
#include "random_gen.h"
#include "rdfi/errors.h"
#include "rdfi/parser.h"
#include "rdfi/serialize.h"

namespace rdfi {
namespace {

using testing::Box;
using testing::Iri;
using testing::Lit;
using testing::Special;
using testing::Var;

TEST(Parser, HotspotFileMatchesTheFixture) {
  EXPECT_EQ(ParseDatabase(testing::ReadDataFile("hotspot.rdfi")),
            testing::HotspotDatabase());
  EXPECT_EQ(ParseDatabase(testing::ReadDataFile("hotspot-disjunctive.rdfi")),
            testing::DisjunctiveHotspotDatabase());
}

TEST(Parser, QueriesAndDomains) {
  const Query q = ParseQuery(testing::ReadDataFile("q-ntpp-small.q"));
  ASSERT_TRUE(std::holds_alternative<ConstructQuery>(q));
  EXPECT_EQ(std::get<ConstructQuery>(q),
            testing::FireInBoxConstruct(Box(10, 12, 21, 17)));
  const Query s = ParseQuery(testing::ReadDataFile("q-select-small.q"));
  ASSERT_TRUE(std::holds_alternative<SelectQuery>(s));
  EXPECT_EQ(std::get<SelectQuery>(s),
            testing::FireInBoxSelect(Box(10, 12, 21, 17)));
  const DomainSpec dom = ParseDomainSpec(testing::ReadDataFile("dom3.spec"));
  ASSERT_EQ(dom.at("R1").size(), 3u);
  EXPECT_EQ(dom.at("R1")[0], Constant(Polygon::Box(11, 13, 15, 15)));
}

TEST(Parser, TermsAndFormulas) {
  EXPECT_EQ(ParseTerm("<a>"), Iri("a"));
  EXPECT_EQ(ParseTerm("_:b1"), Term::Blank("b1"));
  EXPECT_EQ(ParseTerm("_e:L"), Lit("L"));
  EXPECT_EQ(ParseTerm("-5/2"), Term::Const(Constant(Rational(-5, 2))));
  EXPECT_EQ(ParseTerm("\"hello\""), Term::PlainLiteral("hello"));
  EXPECT_EQ(ParseTerm("\"7\"^^<int>"), Term::PlainLiteral("7", "int"));
  EXPECT_EQ(ParseTerm("R(0,0,2,2)"), Box(0, 0, 2, 2));
  EXPECT_EQ(ParseFormula("_e:A = 1 && !(_e:B = 2)"),
            ParseFormula("_e:A = 1 ∧ ¬(_e:B = 2)"));
  EXPECT_EQ(ParseFormula("_e:R TPPi R(0,0,1,1)"),
            testing::Rcc(Box(0, 0, 1, 1), Rel::kTPP, Lit("R")));
  EXPECT_EQ(ParseFormula("_e:X - _e:Y <= 3"),
            Formula::Of(Atom{Rel::kLe, Lit("X"), Lit("Y"),
                             Term::Const(Constant(Rational(3)))}));
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    ParseDatabase("#lang ecl\n<a> <p> .\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 0);
  }
  EXPECT_THROW(ParseDatabase("#lang nope\n"), Error);
  EXPECT_THROW(ParseDatabase("#lang ecl\n#lang pcl\n"), Error);
  EXPECT_THROW(ParseQuery("(select (?x) (triple ?x <p>))"), Error);
  EXPECT_THROW(ParseTerm("\"x <= 1 && x >= 1 && y >= 0 && y <= 1\""), Error);
}

TEST(Parser, SortErrorsAreReported) {
  try {
    ParseDatabase("#lang ecl\n<a> <p> R(0,0,1,1) .\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownDatatype);
  }
  try {
    ParseDatabase("#lang ecl\n#global _e:A < 3 .\n<a> <p> _e:A .\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLanguageMismatch);
  }
}

TEST(Serializer, SelectTextAndJson) {
  const SelectAnswer answer{
      {{{{Var("F"), Iri("fire1")}}, Formula::True()}},
      testing::HotspotDatabase().global(),
      Language::kPcl};
  const std::string text = SerializeSelectText(answer);
  EXPECT_NE(text.find("{?F -> <fire1>}"), std::string::npos);
  EXPECT_EQ(ParseSelectAnswerJson(SerializeSelectJson(answer)), answer);
}

TEST(Serializer, ConstructJsonRoundTrips) {
  const Database db = testing::DisjunctiveHotspotDatabase();
  EXPECT_EQ(ParseConstructAnswerJson(SerializeConstructJson(db)), db);
}

TEST(RoundTrip, RandomDatabasesQueriesAndDomains) {
  for (Language lang : {Language::kEcl, Language::kDiPcl, Language::kDePcl,
                        Language::kRcl, Language::kPcl}) {
    testing::Generator gen(lang, 17 + static_cast<int>(lang));
    for (int i = 0; i < 60; ++i) {
      auto [db, dom] = gen.RandomDatabaseWithDomain();
      const std::string db_text = SerializeDatabase(db);
      EXPECT_EQ(ParseDatabase(db_text), db) << db_text;
      EXPECT_EQ(ParseDomainSpec(SerializeDomainSpec(dom)), dom);
      const Query q = gen.RandomCertainQuery();
      const std::string q_text = SerializeQuery(q);
      EXPECT_EQ(ParseQuery(q_text), q) << q_text;
      const Query s = gen.RandomSelect(gen.RandomPattern(true, true));
      const std::string s_text = SerializeQuery(s);
      EXPECT_EQ(ParseQuery(s_text), s) << s_text;
    }
  }
}

TEST(Fuzz, MutatedInputNeverCrashes) {
  testing::Generator gen(Language::kPcl, 5);
  std::mt19937_64& rng = gen.rng();
  const std::string alphabet = "<>()?!_:e\"=&|.# \n-0123456789RNTPxy";
  int rejected = 0;
  for (int i = 0; i < 300; ++i) {
    std::string text = SerializeDatabase(gen.RandomDatabaseWithDomain().first);
    const int edits = gen.Uniform(1, 4);
    for (int k = 0; k < edits && !text.empty(); ++k) {
      const size_t pos = rng() % text.size();
      text[pos] = alphabet[rng() % alphabet.size()];
    }
    try {
      ParseDatabase(text);
    } catch (const Error&) {
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
}

}  // namespace
}  // namespace rdfi
