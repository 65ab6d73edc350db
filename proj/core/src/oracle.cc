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

#include "rdfi/oracle.h"

#include <algorithm>
#include <iterator>

#include "rdfi/backends.h"
#include "rdfi/constraint.h"
#include "rdfi/errors.h"

namespace rdfi {
namespace {

bool Holds(const Formula& condition, const Valuation& v, Language lang) {
  return EvaluateGround(SubstituteELiterals(condition, v), lang);
}

bool FitsVariable(const Variable& v, const Term& t) {
  if (v.special) return t.is_constant();
  return t.is_iri() || t.is_blank() || t.is_plain_literal();
}

bool BindTerm(const PatternTerm& p, const Term& t, Binding& binding) {
  if (const Term* fixed = std::get_if<Term>(&p)) return *fixed == t;
  const Variable& v = std::get<Variable>(p);
  if (!FitsVariable(v, t)) return false;
  auto [it, inserted] = binding.emplace(v, t);
  return inserted || it->second == t;
}

bool StdCompatible(const Binding& a, const Binding& b) {
  for (const auto& [var, term] : a) {
    auto it = b.find(var);
    if (it != b.end() && it->second != term) return false;
  }
  return true;
}

std::set<Binding> StdJoin(const std::set<Binding>& a,
                          const std::set<Binding>& b) {
  std::set<Binding> out;
  for (const Binding& x : a) {
    for (const Binding& y : b) {
      if (!StdCompatible(x, y)) continue;
      Binding merged = x;
      merged.insert(y.begin(), y.end());
      out.insert(std::move(merged));
    }
  }
  return out;
}

std::set<Binding> StdDiff(const std::set<Binding>& a,
                          const std::set<Binding>& b) {
  std::set<Binding> out;
  for (const Binding& x : a) {
    if (std::none_of(b.begin(), b.end(), [&](const Binding& y) {
          return StdCompatible(x, y);
        })) {
      out.insert(x);
    }
  }
  return out;
}

template <typename T>
std::set<T> Intersect(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

bool Subset(const World& a, const World& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Triple ApplyValuation(const Valuation& v, const Triple& t) {
  Triple out = t;
  if (t.object.is_eliteral()) {
    if (auto it = v.find(t.object.text()); it != v.end()) {
      out.object = Term::Const(it->second);
    }
  }
  return out;
}

World ApplyValuationGraph(const Valuation& v,
                          const std::vector<ConditionalTriple>& graph,
                          Language lang) {
  World out;
  for (const ConditionalTriple& ct : graph) {
    if (Holds(ct.condition, v, lang)) out.insert(ApplyValuation(v, ct.triple));
  }
  return out;
}

std::set<Binding> ApplyValuationMappings(const Valuation& v,
                                         const MappingSet& mappings,
                                         Language lang) {
  std::set<Binding> out;
  for (const ConditionalMapping& m : mappings) {
    if (!Holds(m.condition, v, lang)) continue;
    Binding b;
    for (const auto& [var, term] : m.binding) {
      auto it = term.is_eliteral() ? v.find(term.text()) : v.end();
      b.emplace(var, it != v.end() ? Term::Const(it->second) : term);
    }
    out.insert(std::move(b));
  }
  return out;
}

std::vector<Valuation> EnumerateValuations(const Database& db,
                                           const DomainSpec& dom) {
  const std::set<std::string> lits = ELiteralsOf(db);
  std::vector<std::pair<std::string, const std::vector<Constant>*>> axes;
  for (const std::string& lit : lits) {
    auto it = dom.find(lit);
    if (it == dom.end() || it->second.empty()) {
      throw Error(ErrorCode::kMissingDomain, "no candidates for _e:" + lit);
    }
    for (const Constant& c : it->second) {
      if (!ConstantFitsLanguage(c, db.language())) {
        throw Error(ErrorCode::kLanguageMismatch,
                    "candidate " + c.ToString() + " for _e:" + lit +
                        " is outside " +
                        std::string(LanguageName(db.language())));
      }
    }
    axes.emplace_back(lit, &it->second);
  }
  std::vector<Valuation> out;
  std::vector<size_t> index(axes.size(), 0);
  while (true) {
    Valuation v;
    for (size_t i = 0; i < axes.size(); ++i) {
      v.emplace(axes[i].first, (*axes[i].second)[index[i]]);
    }
    if (Holds(db.global(), v, db.language())) out.push_back(std::move(v));
    size_t i = 0;
    while (i < axes.size() && ++index[i] == axes[i].second->size()) {
      index[i++] = 0;
    }
    if (i == axes.size()) break;
  }
  return out;
}

std::vector<World> EnumerateWorlds(const Database& db, const DomainSpec& dom) {
  std::set<World> worlds;
  for (const Valuation& v : EnumerateValuations(db, dom)) {
    worlds.insert(ApplyValuationGraph(v, db.graph(), db.language()));
  }
  if (worlds.empty()) {
    throw Error(ErrorCode::kEmptyWorldSet,
                "no candidate valuation satisfies the global constraint");
  }
  return {worlds.begin(), worlds.end()};
}

std::set<Binding> StdEvalPattern(const GraphPattern& pattern,
                                 const World& world, Language lang) {
  switch (pattern.kind()) {
    case GraphPattern::Kind::kTriple: {
      const TriplePattern& tp = pattern.triple();
      std::set<Binding> out;
      for (const Triple& t : world) {
        Binding b;
        if (BindTerm(tp.subject, t.subject, b) &&
            BindTerm(tp.predicate, t.predicate, b) &&
            BindTerm(tp.object, t.object, b)) {
          out.insert(std::move(b));
        }
      }
      return out;
    }
    case GraphPattern::Kind::kAnd:
      return StdJoin(StdEvalPattern(pattern.left(), world, lang),
                     StdEvalPattern(pattern.right(), world, lang));
    case GraphPattern::Kind::kUnion: {
      std::set<Binding> out = StdEvalPattern(pattern.left(), world, lang);
      out.merge(StdEvalPattern(pattern.right(), world, lang));
      return out;
    }
    case GraphPattern::Kind::kOpt: {
      const std::set<Binding> left = StdEvalPattern(pattern.left(), world, lang);
      const std::set<Binding> right =
          StdEvalPattern(pattern.right(), world, lang);
      std::set<Binding> out = StdJoin(left, right);
      out.merge(StdDiff(left, right));
      return out;
    }
    case GraphPattern::Kind::kFilter: {
      std::set<Binding> out;
      for (const Binding& b : StdEvalPattern(pattern.left(), world, lang)) {
        if (EvaluateGround(BindVariables(pattern.filter(), b), lang)) {
          out.insert(b);
        }
      }
      return out;
    }
  }
  return {};
}

std::set<Binding> StdEvalSelect(const SelectQuery& q, const World& world,
                                Language lang) {
  const std::set<Variable> projection(q.projection.begin(),
                                      q.projection.end());
  std::set<Binding> out;
  for (const Binding& b : StdEvalPattern(q.pattern, world, lang)) {
    Binding restricted;
    for (const auto& [var, term] : b) {
      if (projection.count(var)) restricted.emplace(var, term);
    }
    out.insert(std::move(restricted));
  }
  return out;
}

World StdEvalConstruct(const ConstructQuery& q, const World& world,
                       Language lang) {
  const std::set<Binding> solutions = StdEvalPattern(q.pattern, world, lang);
  std::vector<ConditionalTriple> as_graph;
  for (const Triple& t : world) as_graph.push_back({t, Formula::True()});
  const auto renamings =
      FreshBlankRenaming(q.construct_template, solutions.size(), as_graph);
  World out;
  size_t k = 0;
  for (const Binding& b : solutions) {
    for (Triple& t : ApplyTemplate(q.construct_template, b, renamings[k])) {
      out.insert(std::move(t));
    }
    ++k;
  }
  return out;
}

World OracleCertainConstruct(const ConstructQuery& q, const Database& db,
                             const DomainSpec& dom) {
  const std::vector<World> worlds = EnumerateWorlds(db, dom);
  World out = StdEvalConstruct(q, worlds.front(), db.language());
  for (size_t i = 1; i < worlds.size() && !out.empty(); ++i) {
    out = Intersect(out, StdEvalConstruct(q, worlds[i], db.language()));
  }
  return out;
}

std::set<Binding> OracleCertainSelect(const SelectQuery& q,
                                      const Database& db,
                                      const DomainSpec& dom) {
  const std::vector<World> worlds = EnumerateWorlds(db, dom);
  std::set<Binding> out = StdEvalSelect(q, worlds.front(), db.language());
  for (size_t i = 1; i < worlds.size() && !out.empty(); ++i) {
    out = Intersect(out, StdEvalSelect(q, worlds[i], db.language()));
  }
  return out;
}

bool Coinitial(const std::vector<World>& gs, const std::vector<World>& hs) {
  auto bounded = [](const std::vector<World>& a, const std::vector<World>& b) {
    return std::all_of(a.begin(), a.end(), [&](const World& g) {
      return std::any_of(b.begin(), b.end(),
                         [&](const World& h) { return Subset(h, g); });
    });
  };
  return bounded(gs, hs) && bounded(hs, gs);
}

World Intersection(const std::vector<World>& worlds) {
  if (worlds.empty()) return {};
  World out = worlds.front();
  for (size_t i = 1; i < worlds.size(); ++i) out = Intersect(out, worlds[i]);
  return out;
}

Database RestrictToDomain(const Database& db, const DomainSpec& dom) {
  std::vector<Formula> parts{db.global()};
  for (const std::string& lit : ELiteralsOf(db)) {
    auto it = dom.find(lit);
    if (it == dom.end() || it->second.empty()) {
      throw Error(ErrorCode::kMissingDomain, "no candidates for _e:" + lit);
    }
    std::vector<Formula> choices;
    for (const Constant& c : it->second) {
      choices.push_back(
          Formula::Of(EqAtom(Term::ELiteral(lit), Term::Const(c))));
    }
    parts.push_back(Formula::Or(std::move(choices)));
  }
  return Database::Make(db.graph(), Formula::And(std::move(parts)),
                        db.language());
}

}  // namespace rdfi
