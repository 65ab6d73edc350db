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

#include "rdfi/constraint.h"

#include <algorithm>
#include <stdexcept>

#include "rdfi/backends.h"
#include "rdfi/errors.h"
#include "rdfi/rcc8.h"

namespace rdfi {
namespace {

bool IsNumericOperand(const Operand& o) {
  return o.coord != Coord::kNone ||
         (o.is_constant() && o.term().constant().is_number());
}

bool IsBoxEquality(const Atom& a) {
  return a.rel == Rel::kEq && !a.sub && !IsNumericOperand(a.lhs) &&
         !IsNumericOperand(a.rhs);
}

[[noreturn]] void NotClosed(const Atom& a, Language lang) {
  throw Error(ErrorCode::kNotClosed, "cannot negate '" +
                                         AtomToString(a, lang) + "' in " +
                                         std::string(LanguageName(lang)));
}

Rel OrderComplement(Rel r) {
  switch (r) {
    case Rel::kLt:
      return Rel::kGe;
    case Rel::kLe:
      return Rel::kGt;
    case Rel::kGt:
      return Rel::kLe;
    case Rel::kGe:
      return Rel::kLt;
    default:
      return r;
  }
}

Formula Nnf(const Formula& f, Language lang, bool negate) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return negate ? Formula::False() : f;
    case Formula::Kind::kFalse:
      return negate ? Formula::True() : f;
    case Formula::Kind::kAtom: {
      if (!negate) return f;
      std::vector<Formula> alternatives;
      for (Atom& a : NegateAtom(f.atom(), lang)) {
        alternatives.push_back(Formula::Of(std::move(a)));
      }
      return Formula::Or(std::move(alternatives));
    }
    case Formula::Kind::kNot:
      return Nnf(f.children()[0], lang, !negate);
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> kids;
      for (const Formula& c : f.children()) kids.push_back(Nnf(c, lang, negate));
      const bool conj = (f.kind() == Formula::Kind::kAnd) != negate;
      return conj ? Formula::And(std::move(kids)) : Formula::Or(std::move(kids));
    }
  }
  return f;
}

using Leaf = std::function<bool(std::span<const Atom>)>;

// Depth-first expansion of a positive NNF agenda. Partial conjunctions are
// checked before every branching point.
bool Explore(Language lang, std::vector<Formula> agenda, Conjunction conj,
             size_t checked, const Leaf& leaf) {
  while (!agenda.empty()) {
    Formula f = std::move(agenda.back());
    agenda.pop_back();
    switch (f.kind()) {
      case Formula::Kind::kTrue:
        continue;
      case Formula::Kind::kFalse:
        return false;
      case Formula::Kind::kAtom:
        conj.push_back(f.atom());
        continue;
      case Formula::Kind::kAnd:
        for (auto it = f.children().rbegin(); it != f.children().rend(); ++it) {
          agenda.push_back(*it);
        }
        continue;
      case Formula::Kind::kOr: {
        if (conj.size() > checked) {
          if (!ConjunctionSatisfiable(lang, conj)) return false;
          checked = conj.size();
        }
        for (const Formula& option : f.children()) {
          std::vector<Formula> next = agenda;
          next.push_back(option);
          if (Explore(lang, std::move(next), conj, checked, leaf)) return true;
        }
        return false;
      }
      case Formula::Kind::kNot:
        throw std::logic_error("negation left in NNF");
    }
  }
  if (!ConjunctionSatisfiable(lang, conj)) return false;
  return leaf(conj);
}

void DnfInto(const Formula& f, std::vector<Conjunction>& out) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      out.emplace_back();
      return;
    case Formula::Kind::kFalse:
      return;
    case Formula::Kind::kAtom:
      out.push_back(Conjunction{f.atom()});
      return;
    case Formula::Kind::kOr:
      for (const Formula& c : f.children()) DnfInto(c, out);
      return;
    case Formula::Kind::kAnd: {
      std::vector<Conjunction> acc{Conjunction{}};
      for (const Formula& c : f.children()) {
        std::vector<Conjunction> part;
        DnfInto(c, part);
        std::vector<Conjunction> next;
        for (const Conjunction& a : acc) {
          for (const Conjunction& b : part) {
            Conjunction merged = a;
            for (const Atom& atom : b) {
              if (std::find(merged.begin(), merged.end(), atom) ==
                  merged.end()) {
                merged.push_back(atom);
              }
            }
            next.push_back(std::move(merged));
          }
        }
        acc = std::move(next);
      }
      for (Conjunction& c : acc) out.push_back(std::move(c));
      return;
    }
    case Formula::Kind::kNot:
      throw std::logic_error("negation left in NNF");
  }
}

}  // namespace

Atom EqAtom(const Term& lhs, const Term& rhs) {
  return Atom::Binary(Rel::kEq, Operand(lhs), Operand(rhs));
}

std::vector<Atom> NegateAtom(const Atom& atom, Language lang) {
  switch (lang) {
    case Language::kEcl: {
      if (atom.rel != Rel::kEq && atom.rel != Rel::kNeq) NotClosed(atom, lang);
      Atom out = atom;
      out.rel = atom.rel == Rel::kEq ? Rel::kNeq : Rel::kEq;
      return {out};
    }
    case Language::kDiPcl:
    case Language::kDePcl:
    case Language::kRcl: {
      if (lang == Language::kRcl && IsBoxEquality(atom)) {
        std::vector<Atom> out;
        for (Coord c : {Coord::kLLx, Coord::kLLy, Coord::kURx, Coord::kURy}) {
          for (Rel r : {Rel::kLt, Rel::kGt}) {
            out.push_back(Atom{r, atom.lhs.WithCoord(c), atom.rhs.WithCoord(c),
                               Operand(Term::Const(Rational(0)))});
          }
        }
        return out;
      }
      if (IsOrder(atom.rel)) {
        Atom out = atom;
        out.rel = OrderComplement(atom.rel);
        return {out};
      }
      if (atom.rel == Rel::kEq) {
        Atom lt = atom, gt = atom;
        lt.rel = Rel::kLt;
        gt.rel = Rel::kGt;
        return {lt, gt};
      }
      NotClosed(atom, lang);
    }
    case Language::kPcl:
    case Language::kTcl: {
      if (!IsTopological(atom.rel) && atom.rel != Rel::kEq) {
        NotClosed(atom, lang);
      }
      static constexpr Rel kForward[] = {Rel::kDC,  Rel::kEC,   Rel::kPO,
                                         Rel::kEq,  Rel::kTPP,  Rel::kNTPP};
      std::vector<Atom> out;
      for (Rel r : kForward) {
        if (r != atom.rel) out.push_back(Atom::Binary(r, atom.lhs, atom.rhs));
      }
      out.push_back(Atom::Binary(Rel::kTPP, atom.rhs, atom.lhs));
      out.push_back(Atom::Binary(Rel::kNTPP, atom.rhs, atom.lhs));
      return out;
    }
  }
  NotClosed(atom, lang);
}

Formula PositiveNnf(const Formula& f, Language lang) {
  return Nnf(f, lang, false);
}

std::vector<Conjunction> ToDnf(const Formula& f, Language lang) {
  std::vector<Conjunction> out;
  DnfInto(PositiveNnf(f, lang), out);
  return out;
}

bool ForEachSatisfiableDisjunct(const Formula& f, Language lang,
                                const Leaf& visit) {
  return Explore(lang, {PositiveNnf(f, lang)}, {}, 0, visit);
}

bool Satisfiable(const Formula& f, Language lang) {
  return ForEachSatisfiableDisjunct(
      f, lang, [](std::span<const Atom>) { return true; });
}

bool Entails(const Formula& phi, const Formula& theta, Language lang) {
  if (theta.is_true() || phi.is_false()) return true;
  return !Satisfiable(Formula::And(phi, Formula::Not(theta)), lang);
}

std::optional<Valuation> Solve(const Formula& f, Language lang,
                               const std::set<std::string>& lits) {
  // Literals outside the chosen disjunct still need a value.
  std::set<std::string> wanted = lits;
  CollectELiterals(f, wanted);
  std::optional<Valuation> found;
  std::optional<Error> gave_up;
  ForEachSatisfiableDisjunct(f, lang, [&](std::span<const Atom> conj) {
    try {
      found = ConjunctionWitness(lang, conj, wanted);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoWitness) throw;
      gave_up = e;
      return false;
    }
    return found.has_value();
  });
  if (found) {
    for (const std::string& l : wanted) {
      if (!found->count(l)) throw std::logic_error("witness misses " + l);
    }
    if (!EvaluateGround(SubstituteELiterals(f, *found), lang)) {
      throw std::logic_error("witness fails its own formula");
    }
    return found;
  }
  if (gave_up) throw *gave_up;
  return std::nullopt;
}

std::optional<Constant> ForcedConstant(const Formula& phi,
                                       const std::string& lit, Language lang) {
  if (!Satisfiable(phi, lang)) {
    throw Error(ErrorCode::kUnsatGlobal, "global constraint is unsatisfiable");
  }
  const Term l = Term::ELiteral(lit);
  auto forced = [&](const Constant& c) {
    return Entails(phi, Formula::Of(EqAtom(l, Term::Const(c))), lang);
  };
  if (IsTopologicalLanguage(lang)) {
    std::set<Constant> landmarks;
    CollectConstants(phi, landmarks);
    for (const Constant& c : landmarks) {
      if (forced(c)) return c;
    }
    return std::nullopt;
  }
  std::optional<Valuation> v = Solve(phi, lang, {lit});
  const Constant c = v->at(lit);
  if (forced(c)) return c;
  return std::nullopt;
}

}  // namespace rdfi
