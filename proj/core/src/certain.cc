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

#include "rdfi/certain.h"

#include <map>
#include <vector>

#include "rdfi/backends.h"
#include "rdfi/constraint.h"
#include "rdfi/errors.h"

namespace rdfi {
namespace {

// Bounds the disjuncts inspected for forced values per candidate source.
constexpr int kMaxForcedDisjuncts = 512;

void RequireSatisfiable(const Database& db) {
  if (!Satisfiable(db.global(), db.language())) {
    throw Error(ErrorCode::kUnsatGlobal, "global constraint is unsatisfiable");
  }
}

void RequirePatternFragment(const GraphPattern& p) {
  if (FragmentOf(p) == Fragment::kOther) {
    throw Error(ErrorCode::kUnsupportedFragment,
                "certain answers need an AUF or well-designed pattern");
  }
}

// Constants an e-literal may certainly take: those written anywhere in the
// answer or the global constraint, plus values forced by some disjunct of
// the constraint under which the e-literal occurs.
class CandidatePool {
 public:
  CandidatePool(const Database& answer) : language_(answer.language()) {
    CollectConstants(answer.global(), base_);
    for (const ConditionalTriple& ct : answer.graph()) {
      CollectConstants(ct.condition, base_);
      if (ct.triple.object.is_constant()) {
        base_.insert(ct.triple.object.constant());
      }
    }
    std::erase_if(base_, [&](const Constant& c) {
      return !ConstantFitsLanguage(c, language_);
    });
    global_ = answer.global();
  }

  std::set<Constant> For(const std::string& lit, const Formula& condition) {
    std::set<Constant> out = base_;
    if (IsTopologicalLanguage(language_)) return out;
    int visited = 0;
    ForEachSatisfiableDisjunct(
        Formula::And(global_, condition), language_,
        [&](std::span<const Atom> atoms) {
          const Valuation forced = ForcedInConjunction(language_, atoms);
          if (auto it = forced.find(lit); it != forced.end()) {
            out.insert(it->second);
          }
          return ++visited >= kMaxForcedDisjuncts;
        });
    return out;
  }

 private:
  Language language_;
  Formula global_;
  std::set<Constant> base_;
};

// The disjunction over answer triples that yield t in a world.
Formula Theta(const Triple& t, const std::vector<ConditionalTriple>& answer) {
  std::vector<Formula> disjuncts;
  for (const ConditionalTriple& ct : answer) {
    if (ct.triple.subject != t.subject || ct.triple.predicate != t.predicate) {
      continue;
    }
    if (ct.triple.object == t.object) {
      disjuncts.push_back(ct.condition);
    } else if (ct.triple.object.is_eliteral() && t.object.is_constant()) {
      disjuncts.push_back(Formula::And(
          ct.condition, Formula::Of(EqAtom(ct.triple.object, t.object))));
    }
  }
  return Formula::Or(std::move(disjuncts));
}

bool IsCertain(const Triple& t, const Database& answer) {
  return Entails(answer.global(), Theta(t, answer.graph()),
                 answer.language());
}

}  // namespace

Database EqComplete(const Database& db) {
  RequireSatisfiable(db);
  std::set<std::string> lits;
  for (const ConditionalTriple& ct : db.graph()) {
    if (ct.triple.object.is_eliteral()) lits.insert(ct.triple.object.text());
    CollectELiterals(ct.condition, lits);
  }
  std::map<std::string, Term> forced;
  for (const std::string& lit : lits) {
    if (auto c = ForcedConstant(db.global(), lit, db.language())) {
      forced.emplace(lit, Term::Const(*c));
    }
  }
  if (forced.empty()) return db;
  std::vector<ConditionalTriple> graph;
  for (ConditionalTriple ct : db.graph()) {
    if (ct.triple.object.is_eliteral()) {
      if (auto it = forced.find(ct.triple.object.text()); it != forced.end()) {
        ct.triple.object = it->second;
      }
    }
    for (const auto& [lit, term] : forced) {
      ct.condition = ReplaceELiteral(ct.condition, lit, term);
    }
    graph.push_back(std::move(ct));
  }
  return Database::Make(std::move(graph), db.global(), db.language());
}

Database Normalize(const Database& db) {
  std::map<Triple, std::vector<Formula>> groups;
  for (const ConditionalTriple& ct : db.graph()) {
    groups[ct.triple].push_back(ct.condition);
  }
  std::vector<ConditionalTriple> graph;
  for (auto& [triple, conditions] : groups) {
    graph.push_back({triple, Formula::Or(std::move(conditions))});
  }
  return Database::Make(std::move(graph), db.global(), db.language());
}

void RequireCertainFragment(const ConstructQuery& q) {
  if (!TemplateBlanks(q.construct_template).empty()) {
    throw Error(ErrorCode::kUnsupportedFragment,
                "certain answers need a blank-free template");
  }
  RequirePatternFragment(q.pattern);
}

Graph CertainAnswer(const ConstructQuery& q, const Database& db) {
  RequireCertainFragment(q);
  RequireSatisfiable(db);
  const Database answer = EvalConstruct(q, db);
  const Database h = Normalize(EqComplete(answer));
  const Language lang = db.language();

  Graph out;
  for (const ConditionalTriple& ct : h.graph()) {
    if (!ct.triple.object.is_eliteral() &&
        Entails(h.global(), ct.condition, lang)) {
      out.insert(ct.triple);
    }
  }
  // A triple can be certain although no single conditional triple entails
  // it, e.g. when an e-literal object equals a constant in every world.
  CandidatePool pool(answer);
  for (const ConditionalTriple& ct : h.graph()) {
    if (!ct.triple.object.is_eliteral()) continue;
    for (const Constant& c : pool.For(ct.triple.object.text(), ct.condition)) {
      Triple t{ct.triple.subject, ct.triple.predicate, Term::Const(c)};
      if (!out.count(t) && IsCertain(t, answer)) out.insert(std::move(t));
    }
  }
  return out;
}

bool Certainty(const ConstructQuery& q, const Graph& h, const Database& db) {
  RequireCertainFragment(q);
  for (const Triple& t : h) {
    if (!IsETriple(t) || t.object.is_eliteral()) {
      throw Error(ErrorCode::kIllFormedTriple,
                  "certainty is decided for ground triples: " + t.ToString());
    }
  }
  RequireSatisfiable(db);
  const Database answer = EvalConstruct(q, db);
  for (const Triple& t : h) {
    if (!IsCertain(t, answer)) return false;
  }
  return true;
}

std::set<Binding> SelectCertainAnswer(const SelectQuery& q,
                                      const Database& db) {
  RequirePatternFragment(q.pattern);
  RequireSatisfiable(db);
  const Language lang = db.language();
  const SelectAnswer answer = EvalSelect(q, db);

  // Certainty of a ground binding: some solution with the same domain agrees
  // with it in every world.
  auto certain = [&](const Binding& beta) {
    std::vector<Formula> disjuncts;
    for (const ConditionalMapping& m : answer.solutions) {
      if (m.binding.size() != beta.size()) continue;
      std::vector<Formula> parts{m.condition};
      bool ok = true;
      for (auto it = m.binding.begin(), jt = beta.begin();
           ok && it != m.binding.end(); ++it, ++jt) {
        if (it->first != jt->first) {
          ok = false;
        } else if (it->second == jt->second) {
          continue;
        } else if (it->second.is_eliteral() && jt->second.is_constant()) {
          parts.push_back(Formula::Of(EqAtom(it->second, jt->second)));
        } else {
          ok = false;
        }
      }
      if (ok) disjuncts.push_back(Formula::And(std::move(parts)));
    }
    return Entails(answer.global, Formula::Or(std::move(disjuncts)), lang);
  };

  std::vector<ConditionalTriple> pseudo;
  for (const ConditionalMapping& m : answer.solutions) {
    pseudo.push_back({Triple{Term::Iri("s"), Term::Iri("p"), Term::Iri("o")},
                      m.condition});
    for (const auto& [var, term] : m.binding) {
      if (term.is_constant()) {
        pseudo.push_back(
            {Triple{Term::Iri("s"), Term::Iri("p"), term}, Formula::True()});
      }
    }
  }
  CandidatePool pool(
      Database::Make(std::move(pseudo), answer.global, answer.language));

  std::set<Binding> out;
  for (const ConditionalMapping& m : answer.solutions) {
    // Expand e-literal values over their candidates.
    std::vector<Binding> partial{Binding{}};
    for (const auto& [var, term] : m.binding) {
      std::vector<Binding> next;
      if (term.is_eliteral()) {
        for (const Constant& c : pool.For(term.text(), m.condition)) {
          for (Binding b : partial) {
            b.emplace(var, Term::Const(c));
            next.push_back(std::move(b));
          }
        }
      } else {
        for (Binding b : partial) {
          b.emplace(var, term);
          next.push_back(std::move(b));
        }
      }
      partial = std::move(next);
    }
    for (Binding& b : partial) {
      if (!out.count(b) && certain(b)) out.insert(std::move(b));
    }
  }
  return out;
}

}  // namespace rdfi
