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

#ifndef RDFI_ALGEBRA_H_
#define RDFI_ALGEBRA_H_

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rdfi/database.h"
#include "rdfi/formula.h"

namespace rdfi {

// A partial binding together with the condition under which it holds.
struct ConditionalMapping {
  Binding binding;
  Formula condition;

  friend bool operator==(const ConditionalMapping&,
                         const ConditionalMapping&) = default;
  friend std::strong_ordering operator<=>(const ConditionalMapping& a,
                                          const ConditionalMapping& b);
};

// Structural set semantics. Members with condition false are never stored.
using MappingSet = std::set<ConditionalMapping>;

// Inserts unless the condition is syntactically false.
void AddMapping(MappingSet& set, ConditionalMapping m);

using PatternTerm = std::variant<Term, Variable>;

std::string PatternTermToString(const PatternTerm& t);

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

class GraphPattern {
 public:
  enum class Kind { kTriple, kAnd, kUnion, kOpt, kFilter };

  static GraphPattern Triple(TriplePattern t);
  static GraphPattern And(GraphPattern l, GraphPattern r);
  static GraphPattern Union(GraphPattern l, GraphPattern r);
  static GraphPattern Opt(GraphPattern l, GraphPattern r);
  static GraphPattern Filter(GraphPattern inner, Formula condition);

  Kind kind() const { return node_->kind; }
  const TriplePattern& triple() const { return node_->triple; }
  // The inner pattern of a filter is left().
  const GraphPattern& left() const { return node_->children[0]; }
  const GraphPattern& right() const { return node_->children[1]; }
  const Formula& filter() const { return node_->filter; }

  // Variables of the pattern, including those of filter conditions.
  std::set<Variable> Variables() const;

  friend bool operator==(const GraphPattern& a, const GraphPattern& b);

 private:
  struct Node {
    Kind kind;
    TriplePattern triple;
    std::vector<GraphPattern> children;
    Formula filter;
  };
  explicit GraphPattern(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

// Bindings agree on every shared variable.
bool Compatible(const ConditionalMapping& m1, const ConditionalMapping& m2);

// Every shared variable agrees, or is special with an e-literal on one side.
bool PossiblyCompatible(const ConditionalMapping& m1,
                        const ConditionalMapping& m2);

// Merged binding; e-literals are kept where one side has an e-literal, the
// left one when both do. Every reconciled pair adds an EQ atom to the
// condition. Throws Error(kNotPossiblyCompatible).
ConditionalMapping Join(const ConditionalMapping& m1,
                        const ConditionalMapping& m2);

MappingSet JoinSets(const MappingSet& o1, const MappingSet& o2);
MappingSet UnionSets(const MappingSet& o1, const MappingSet& o2);
// Members of o1 possibly compatible with no member of o2 are kept as they
// are. The others are kept under the extra condition that, for each possibly
// compatible partner, its condition fails or some shared special variable
// takes a different value.
MappingSet DiffSets(const MappingSet& o1, const MappingSet& o2);
MappingSet LeftJoinSets(const MappingSet& o1, const MappingSet& o2);

// Lazy evaluation: FILTER conditions are attached, never checked. Throws
// Error(kLanguageMismatch) for filter atoms foreign to the database language.
MappingSet EvalPattern(const GraphPattern& pattern, const Database& db);

ConditionalMapping Restrict(const ConditionalMapping& m,
                            const std::set<Variable>& vars);

// dom(m1) is contained in dom(m2) and both agree on it.
bool Subsumes(const Binding& m1, const Binding& m2);
// Every member of o1 is subsumed by some member of o2.
bool SetSubsumed(const std::set<Binding>& o1, const std::set<Binding>& o2);

}  // namespace rdfi

#endif  // RDFI_ALGEBRA_H_
