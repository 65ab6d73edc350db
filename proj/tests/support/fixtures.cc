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

#include "fixtures.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rdfi/constraint.h"

#ifndef RDFI_TEST_DATA_DIR
#error "RDFI_TEST_DATA_DIR must be defined"
#endif

namespace rdfi::testing {

Term Box(int x1, int y1, int x2, int y2) {
  return Term::Const(Constant(Polygon::Box(x1, y1, x2, y2)));
}

Term Iri(const std::string& name) { return Term::Iri(name); }
Term Lit(const std::string& name) { return Term::ELiteral(name); }
Variable Var(const std::string& name) { return Variable{name, false}; }
Variable Special(const std::string& name) { return Variable{name, true}; }

Formula Rcc(const Term& a, Rel rel, const Term& b) {
  return Formula::Of(Atom::Binary(rel, a, b));
}

namespace {

std::vector<ConditionalTriple> HotspotTriples() {
  const Formula t = Formula::True();
  return {
      {{Iri("hotspot1"), Iri("type"), Iri("Hotspot")}, t},
      {{Iri("fire1"), Iri("type"), Iri("Fire")}, t},
      {{Iri("hotspot1"), Iri("correspondsTo"), Iri("fire1")}, t},
      {{Iri("fire1"), Iri("occurredIn"), Lit("R1")}, t},
  };
}

}  // namespace

Database HotspotDatabase() {
  return Database::Make(HotspotTriples(),
                        Rcc(Lit("R1"), Rel::kNTPP, Box(6, 8, 23, 19)),
                        Language::kPcl);
}

Database DisjunctiveHotspotDatabase() {
  std::vector<ConditionalTriple> graph = HotspotTriples();
  graph.push_back({{Iri("fire2"), Iri("occurredIn"), Box(6, 8, 23, 19)},
                   Formula::True()});
  const Formula global = Formula::Or(
      Formula::And(Rcc(Lit("R1"), Rel::kNTPP, Box(6, 8, 23, 19)),
                   Rcc(Lit("R1"), Rel::kNTPP, Box(10, 12, 21, 17))),
      Rcc(Lit("R1"), Rel::kPO, Box(2, 4, 6, 8)));
  return Database::Make(std::move(graph), global, Language::kPcl);
}

ConditionalMapping SampleMapping(int i) {
  const Term fire1 = Iri("fire1");
  switch (i) {
    case 1:
      return {{{Var("F"), fire1}, {Special("S"), Box(1, 1, 2, 2)}},
              Formula::True()};
    case 2:
      return {{{Var("F"), fire1}, {Special("S"), Lit("R1")}},
              Rcc(Lit("R1"), Rel::kNTPP, Box(0, 0, 10, 10))};
    case 3:
      return {{{Var("F"), fire1}, {Special("S"), Lit("R1")}},
              Formula::And(Rcc(Lit("R1"), Rel::kNTPP, Lit("R2")),
                           Rcc(Lit("R2"), Rel::kDC, Box(0, 0, 1, 1)))};
    case 4:
      return {{{Var("F"), fire1}, {Special("S"), Lit("R1")}},
              Formula::True()};
  }
  throw std::out_of_range("sample mapping");
}

Binding SampleBinding(int i) {
  const Term fire1 = Iri("fire1");
  switch (i) {
    case 1:
      return {{Var("F"), fire1}, {Special("S"), Box(1, 1, 2, 2)}};
    case 2:
      return {{Var("F"), fire1}, {Special("S"), Lit("R1")}};
    case 3:
      return {{Var("F"), fire1}, {Special("S"), Lit("R2")}};
    case 4:
      return {{Var("F"), fire1}};
  }
  throw std::out_of_range("sample binding");
}

GraphPattern FireInBoxPattern(const Term& box) {
  const GraphPattern fires = GraphPattern::Triple(
      {Var("F"), Iri("type"), Iri("Fire")});
  const GraphPattern located = GraphPattern::Triple(
      {Var("F"), Iri("occurredIn"), Special("R")});
  return GraphPattern::Filter(
      GraphPattern::And(fires, located),
      Formula::Of(Atom::Binary(Rel::kNTPP, Special("R"), box)));
}

SelectQuery FireInBoxSelect(const Term& box) {
  return SelectQuery{{Var("F")}, FireInBoxPattern(box)};
}

ConstructQuery FireInBoxConstruct(const Term& box) {
  return ConstructQuery{{{Var("F"), Iri("type"), Iri("Fire")}},
                        FireInBoxPattern(box)};
}

DomainSpec HotspotDomain() {
  return {{"R1",
           {Box(11, 13, 15, 15).constant(), Box(10, 12, 21, 17).constant(),
            Box(0, 0, 1, 1).constant()}}};
}

bool Equivalent(const Formula& a, const Formula& b, Language lang) {
  return Entails(a, b, lang) && Entails(b, a, lang);
}

bool EquivalentMappings(const MappingSet& a, const MappingSet& b,
                        Language lang) {
  auto covered = [&](const MappingSet& x, const MappingSet& y) {
    for (const ConditionalMapping& m : x) {
      bool found = false;
      for (const ConditionalMapping& n : y) {
        if (m.binding == n.binding &&
            Equivalent(m.condition, n.condition, lang)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  return a.size() == b.size() && covered(a, b) && covered(b, a);
}

std::string ReadDataFile(const std::string& name) {
  std::ifstream in(std::string(RDFI_TEST_DATA_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing test data file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rdfi::testing
