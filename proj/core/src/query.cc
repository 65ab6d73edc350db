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

#include "rdfi/query.h"

#include "rdfi/errors.h"

namespace rdfi {
namespace {

bool ContainsUnion(const GraphPattern& p) {
  switch (p.kind()) {
    case GraphPattern::Kind::kTriple:
      return false;
    case GraphPattern::Kind::kUnion:
      return true;
    case GraphPattern::Kind::kFilter:
      return ContainsUnion(p.left());
    default:
      return ContainsUnion(p.left()) || ContainsUnion(p.right());
  }
}

bool ContainsOpt(const GraphPattern& p) {
  switch (p.kind()) {
    case GraphPattern::Kind::kTriple:
      return false;
    case GraphPattern::Kind::kOpt:
      return true;
    case GraphPattern::Kind::kFilter:
      return ContainsOpt(p.left());
    default:
      return ContainsOpt(p.left()) || ContainsOpt(p.right());
  }
}

std::set<Variable> Merge(const std::set<Variable>& a,
                         const std::set<Variable>& b) {
  std::set<Variable> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

// outside: variables occurring in the whole pattern outside p.
bool WellDesignedIn(const GraphPattern& p, const std::set<Variable>& outside) {
  switch (p.kind()) {
    case GraphPattern::Kind::kTriple:
      return true;
    case GraphPattern::Kind::kFilter: {
      std::set<Variable> condition_vars;
      CollectVariables(p.filter(), condition_vars);
      const std::set<Variable> inner = p.left().Variables();
      for (const Variable& v : condition_vars) {
        if (!inner.count(v)) return false;
      }
      return WellDesignedIn(p.left(), Merge(outside, condition_vars));
    }
    case GraphPattern::Kind::kOpt: {
      const std::set<Variable> left = p.left().Variables();
      for (const Variable& v : p.right().Variables()) {
        if (outside.count(v) && !left.count(v)) return false;
      }
      [[fallthrough]];
    }
    default: {
      const std::set<Variable> left = p.left().Variables();
      const std::set<Variable> right = p.right().Variables();
      return WellDesignedIn(p.left(), Merge(outside, right)) &&
             WellDesignedIn(p.right(), Merge(outside, left));
    }
  }
}

Term ResolveTemplateTerm(const PatternTerm& t, const Binding& binding,
                         const std::map<std::string, std::string>& renaming,
                         bool& ok) {
  if (const Variable* v = std::get_if<Variable>(&t)) {
    auto it = binding.find(*v);
    if (it == binding.end()) {
      ok = false;
      return Term();
    }
    return it->second;
  }
  const Term& term = std::get<Term>(t);
  if (term.is_blank()) {
    auto it = renaming.find(term.text());
    if (it != renaming.end()) return Term::Blank(it->second);
  }
  return term;
}

}  // namespace

const GraphPattern& PatternOf(const Query& q) {
  return std::visit([](const auto& x) -> const GraphPattern& { return x.pattern; },
                    q);
}

std::string_view FragmentName(Fragment f) {
  switch (f) {
    case Fragment::kAuf:
      return "AUF";
    case Fragment::kWd:
      return "WD";
    case Fragment::kOther:
      return "OTHER";
  }
  return "?";
}

bool CheckWellDesigned(const GraphPattern& pattern) {
  if (ContainsUnion(pattern)) {
    throw Error(ErrorCode::kNotAfoFragment,
                "well-designedness is defined for AND, FILTER and OPT only");
  }
  return WellDesignedIn(pattern, {});
}

Fragment FragmentOf(const GraphPattern& pattern) {
  if (!ContainsOpt(pattern)) return Fragment::kAuf;
  if (ContainsUnion(pattern)) return Fragment::kOther;
  return CheckWellDesigned(pattern) ? Fragment::kWd : Fragment::kOther;
}

std::set<std::string> TemplateBlanks(const Template& t) {
  std::set<std::string> out;
  for (const TemplateTriple& tt : t) {
    for (const PatternTerm* p : {&tt.subject, &tt.predicate, &tt.object}) {
      if (const Term* term = std::get_if<Term>(p); term && term->is_blank()) {
        out.insert(term->text());
      }
    }
  }
  return out;
}

SelectAnswer EvalSelect(const SelectQuery& q, const Database& db) {
  const std::set<Variable> projection(q.projection.begin(),
                                      q.projection.end());
  SelectAnswer answer{{}, db.global(), db.language()};
  for (const ConditionalMapping& m : EvalPattern(q.pattern, db)) {
    AddMapping(answer.solutions, Restrict(m, projection));
  }
  return answer;
}

std::vector<std::map<std::string, std::string>> FreshBlankRenaming(
    const Template& construct_template, size_t num_solutions,
    const std::vector<ConditionalTriple>& graph) {
  std::set<std::string> used;
  for (const ConditionalTriple& ct : graph) {
    if (ct.triple.subject.is_blank()) used.insert(ct.triple.subject.text());
    if (ct.triple.object.is_blank()) used.insert(ct.triple.object.text());
  }
  const std::set<std::string> blanks = TemplateBlanks(construct_template);
  std::vector<std::map<std::string, std::string>> out(num_solutions);
  for (size_t k = 0; k < num_solutions; ++k) {
    for (const std::string& b : blanks) {
      std::string label = b + "_" + std::to_string(k);
      for (int counter = 1; used.count(label); ++counter) {
        label = b + "_" + std::to_string(k) + "_" + std::to_string(counter);
      }
      used.insert(label);
      out[k][b] = label;
    }
  }
  return out;
}

std::vector<Triple> ApplyTemplate(
    const Template& construct_template, const Binding& binding,
    const std::map<std::string, std::string>& renaming) {
  std::vector<Triple> out;
  for (const TemplateTriple& tt : construct_template) {
    bool ok = true;
    Triple t{ResolveTemplateTerm(tt.subject, binding, renaming, ok),
             ResolveTemplateTerm(tt.predicate, binding, renaming, ok),
             ResolveTemplateTerm(tt.object, binding, renaming, ok)};
    if (ok && IsETriple(t)) out.push_back(std::move(t));
  }
  return out;
}

Database EvalConstruct(const ConstructQuery& q, const Database& db) {
  const MappingSet solutions = EvalPattern(q.pattern, db);
  const auto renamings =
      FreshBlankRenaming(q.construct_template, solutions.size(), db.graph());
  std::vector<ConditionalTriple> graph;
  size_t k = 0;
  for (const ConditionalMapping& m : solutions) {
    for (Triple& t : ApplyTemplate(q.construct_template, m.binding,
                                   renamings[k])) {
      graph.push_back({std::move(t), m.condition});
    }
    ++k;
  }
  return Database::Make(std::move(graph), db.global(), db.language());
}

}  // namespace rdfi
