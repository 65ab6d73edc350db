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

#include "rdfi/algebra.h"

#include "rdfi/constraint.h"
#include "rdfi/errors.h"

namespace rdfi {
namespace {

void AddPatternTermVariable(const PatternTerm& t, std::set<Variable>& out) {
  if (const Variable* v = std::get_if<Variable>(&t)) out.insert(*v);
}

void CollectPatternVariables(const GraphPattern& p, std::set<Variable>& out) {
  switch (p.kind()) {
    case GraphPattern::Kind::kTriple:
      AddPatternTermVariable(p.triple().subject, out);
      AddPatternTermVariable(p.triple().predicate, out);
      AddPatternTermVariable(p.triple().object, out);
      return;
    case GraphPattern::Kind::kFilter:
      CollectPatternVariables(p.left(), out);
      CollectVariables(p.filter(), out);
      return;
    default:
      CollectPatternVariables(p.left(), out);
      CollectPatternVariables(p.right(), out);
  }
}

bool FitsVariable(const Variable& v, const Term& t) {
  if (v.special) return t.is_constant() || t.is_eliteral();
  return t.is_iri() || t.is_blank() || t.is_plain_literal();
}

bool BindTerm(const PatternTerm& p, const Term& t, Binding& binding) {
  if (const Term* fixed = std::get_if<Term>(&p)) return *fixed == t;
  const Variable& v = std::get<Variable>(p);
  if (!FitsVariable(v, t)) return false;
  auto [it, inserted] = binding.emplace(v, t);
  return inserted || it->second == t;
}

void EvalTriple(const TriplePattern& tp, const Database& db, MappingSet& out) {
  for (const ConditionalTriple& ct : db.graph()) {
    Binding binding;
    if (!BindTerm(tp.subject, ct.triple.subject, binding) ||
        !BindTerm(tp.predicate, ct.triple.predicate, binding)) {
      continue;
    }
    const Term* pattern_object = std::get_if<Term>(&tp.object);
    if (pattern_object && pattern_object->is_constant() &&
        ct.triple.object.is_eliteral()) {
      AddMapping(out, {std::move(binding),
                       Formula::And(Formula::Of(EqAtom(ct.triple.object,
                                                       *pattern_object)),
                                    ct.condition)});
      continue;
    }
    if (!BindTerm(tp.object, ct.triple.object, binding)) continue;
    AddMapping(out, {std::move(binding), ct.condition});
  }
}

MappingSet EvalFilter(const MappingSet& inner, const Formula& condition,
                      Language lang) {
  MappingSet out;
  for (const ConditionalMapping& m : inner) {
    const Formula bound = BindVariables(condition, m.binding);
    for (const Conjunction& conj : ToDnf(bound, lang)) {
      AddMapping(out, {m.binding, Formula::And(m.condition,
                                               Formula::Conjunction(conj))});
    }
  }
  return out;
}

}  // namespace

std::strong_ordering operator<=>(const ConditionalMapping& a,
                                 const ConditionalMapping& b) {
  if (auto c = a.binding <=> b.binding; c != 0) return c;
  return a.condition <=> b.condition;
}

void AddMapping(MappingSet& set, ConditionalMapping m) {
  if (m.condition.is_false()) return;
  set.insert(std::move(m));
}

std::string PatternTermToString(const PatternTerm& t) {
  if (const Term* term = std::get_if<Term>(&t)) return term->ToString();
  return std::get<Variable>(t).ToString();
}

GraphPattern GraphPattern::Triple(TriplePattern t) {
  return GraphPattern(std::make_shared<Node>(
      Node{Kind::kTriple, std::move(t), {}, Formula::True()}));
}

GraphPattern GraphPattern::And(GraphPattern l, GraphPattern r) {
  return GraphPattern(std::make_shared<Node>(
      Node{Kind::kAnd, {}, {std::move(l), std::move(r)}, Formula::True()}));
}

GraphPattern GraphPattern::Union(GraphPattern l, GraphPattern r) {
  return GraphPattern(std::make_shared<Node>(
      Node{Kind::kUnion, {}, {std::move(l), std::move(r)}, Formula::True()}));
}

GraphPattern GraphPattern::Opt(GraphPattern l, GraphPattern r) {
  return GraphPattern(std::make_shared<Node>(
      Node{Kind::kOpt, {}, {std::move(l), std::move(r)}, Formula::True()}));
}

GraphPattern GraphPattern::Filter(GraphPattern inner, Formula condition) {
  return GraphPattern(std::make_shared<Node>(
      Node{Kind::kFilter, {}, {std::move(inner)}, std::move(condition)}));
}

std::set<Variable> GraphPattern::Variables() const {
  std::set<Variable> out;
  CollectPatternVariables(*this, out);
  return out;
}

bool operator==(const GraphPattern& a, const GraphPattern& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GraphPattern::Kind::kTriple:
      return a.triple() == b.triple();
    case GraphPattern::Kind::kFilter:
      return a.filter() == b.filter() && a.left() == b.left();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

bool Compatible(const ConditionalMapping& m1, const ConditionalMapping& m2) {
  for (const auto& [var, term] : m1.binding) {
    auto it = m2.binding.find(var);
    if (it != m2.binding.end() && !(it->second == term)) return false;
  }
  return true;
}

bool PossiblyCompatible(const ConditionalMapping& m1,
                        const ConditionalMapping& m2) {
  for (const auto& [var, term] : m1.binding) {
    auto it = m2.binding.find(var);
    if (it == m2.binding.end() || it->second == term) continue;
    if (!var.special) return false;
    if (!term.is_eliteral() && !it->second.is_eliteral()) return false;
  }
  return true;
}

ConditionalMapping Join(const ConditionalMapping& m1,
                        const ConditionalMapping& m2) {
  if (!PossiblyCompatible(m1, m2)) {
    throw Error(ErrorCode::kNotPossiblyCompatible,
                "join of mappings that are not possibly compatible");
  }
  Binding merged = m2.binding;
  std::vector<Formula> parts{m1.condition, m2.condition};
  for (const auto& [var, t1] : m1.binding) {
    auto it = merged.find(var);
    if (it == merged.end()) {
      merged.emplace(var, t1);
      continue;
    }
    const Term t2 = it->second;
    if (t1 == t2) continue;
    if (t1.is_eliteral()) {
      it->second = t1;
      parts.push_back(Formula::Of(EqAtom(t1, t2)));
    } else {
      // t2 is the e-literal and stays.
      parts.push_back(Formula::Of(EqAtom(t2, t1)));
    }
  }
  return {std::move(merged), Formula::And(std::move(parts))};
}

MappingSet JoinSets(const MappingSet& o1, const MappingSet& o2) {
  MappingSet out;
  for (const ConditionalMapping& a : o1) {
    for (const ConditionalMapping& b : o2) {
      if (PossiblyCompatible(a, b)) AddMapping(out, Join(a, b));
    }
  }
  return out;
}

MappingSet UnionSets(const MappingSet& o1, const MappingSet& o2) {
  MappingSet out = o1;
  for (const ConditionalMapping& m : o2) AddMapping(out, m);
  return out;
}

MappingSet DiffSets(const MappingSet& o1, const MappingSet& o2) {
  MappingSet out;
  for (const ConditionalMapping& m : o1) {
    std::vector<Formula> parts{m.condition};
    bool related = false;
    for (const ConditionalMapping& other : o2) {
      if (!PossiblyCompatible(m, other)) continue;
      related = true;
      std::vector<Formula> differs;
      for (const auto& [var, term] : m.binding) {
        if (!var.special) continue;
        auto it = other.binding.find(var);
        if (it == other.binding.end() || it->second == term) continue;
        differs.push_back(Formula::Not(Formula::Of(EqAtom(term, it->second))));
      }
      parts.push_back(Formula::Implies(other.condition,
                                       Formula::Or(std::move(differs))));
    }
    if (!related) {
      AddMapping(out, m);
    } else {
      AddMapping(out, {m.binding, Formula::And(std::move(parts))});
    }
  }
  return out;
}

MappingSet LeftJoinSets(const MappingSet& o1, const MappingSet& o2) {
  return UnionSets(JoinSets(o1, o2), DiffSets(o1, o2));
}

MappingSet EvalPattern(const GraphPattern& pattern, const Database& db) {
  switch (pattern.kind()) {
    case GraphPattern::Kind::kTriple: {
      MappingSet out;
      EvalTriple(pattern.triple(), db, out);
      return out;
    }
    case GraphPattern::Kind::kAnd:
      return JoinSets(EvalPattern(pattern.left(), db),
                      EvalPattern(pattern.right(), db));
    case GraphPattern::Kind::kUnion:
      return UnionSets(EvalPattern(pattern.left(), db),
                       EvalPattern(pattern.right(), db));
    case GraphPattern::Kind::kOpt:
      return LeftJoinSets(EvalPattern(pattern.left(), db),
                          EvalPattern(pattern.right(), db));
    case GraphPattern::Kind::kFilter:
      ValidateFormula(pattern.filter(), db.language());
      return EvalFilter(EvalPattern(pattern.left(), db), pattern.filter(),
                        db.language());
  }
  return {};
}

ConditionalMapping Restrict(const ConditionalMapping& m,
                            const std::set<Variable>& vars) {
  ConditionalMapping out{{}, m.condition};
  for (const auto& [var, term] : m.binding) {
    if (vars.count(var)) out.binding.emplace(var, term);
  }
  return out;
}

bool Subsumes(const Binding& m1, const Binding& m2) {
  for (const auto& [var, term] : m1) {
    auto it = m2.find(var);
    if (it == m2.end() || !(it->second == term)) return false;
  }
  return true;
}

bool SetSubsumed(const std::set<Binding>& o1, const std::set<Binding>& o2) {
  for (const Binding& a : o1) {
    bool covered = false;
    for (const Binding& b : o2) {
      if (Subsumes(a, b)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace rdfi
