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

#include "rdfi/formula.h"

#include <algorithm>
#include <utility>

namespace rdfi {
namespace {

std::string_view CoordName(Coord c) {
  switch (c) {
    case Coord::kLLx:
      return "LLx";
    case Coord::kLLy:
      return "LLy";
    case Coord::kURx:
      return "URx";
    case Coord::kURy:
      return "URy";
    case Coord::kNone:
      break;
  }
  return "";
}

std::string OperandToString(const Operand& o) {
  std::string inner =
      o.is_term() ? o.term().ToString() : o.variable().ToString();
  if (o.coord == Coord::kNone) return inner;
  return std::string(CoordName(o.coord)) + "(" + inner + ")";
}

bool IsNumeric(const Operand& o) {
  return o.coord != Coord::kNone ||
         (o.is_constant() && o.term().constant().is_number());
}

std::string_view RelText(const Atom& a, Language lang) {
  switch (a.rel) {
    case Rel::kEq: {
      if (IsTopologicalLanguage(lang)) return "EQ";
      if (lang == Language::kRcl && !a.sub && !IsNumeric(a.lhs) &&
          !IsNumeric(a.rhs)) {
        return "EQ";
      }
      return "=";
    }
    case Rel::kNeq:
      return "!=";
    case Rel::kLt:
      return "<";
    case Rel::kLe:
      return "<=";
    case Rel::kGt:
      return ">";
    case Rel::kGe:
      return ">=";
    case Rel::kDC:
      return "DC";
    case Rel::kEC:
      return "EC";
    case Rel::kPO:
      return "PO";
    case Rel::kTPP:
      return "TPP";
    case Rel::kNTPP:
      return "NTPP";
  }
  return "?";
}

void AppendFormula(const Formula& f, Language lang, bool nested,
                   std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      out += "true";
      return;
    case Formula::Kind::kFalse:
      out += "false";
      return;
    case Formula::Kind::kAtom:
      out += AtomToString(f.atom(), lang);
      return;
    case Formula::Kind::kNot:
      out += "!(";
      AppendFormula(f.children()[0], lang, false, out);
      out += ")";
      return;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      const bool is_or = f.kind() == Formula::Kind::kOr;
      const bool paren = is_or && nested;
      if (paren) out += "(";
      bool first = true;
      for (const Formula& c : f.children()) {
        if (!first) out += is_or ? " || " : " && ";
        first = false;
        AppendFormula(c, lang, !is_or, out);
      }
      if (paren) out += ")";
      return;
    }
  }
}

template <typename Fn>
Formula MapAtoms(const Formula& f, const Fn& fn) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return f;
    case Formula::Kind::kAtom:
      return fn(f.atom());
    case Formula::Kind::kNot:
      return Formula::Not(MapAtoms(f.children()[0], fn));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> kids;
      kids.reserve(f.children().size());
      for (const Formula& c : f.children()) kids.push_back(MapAtoms(c, fn));
      return f.kind() == Formula::Kind::kAnd ? Formula::And(std::move(kids))
                                             : Formula::Or(std::move(kids));
    }
  }
  return f;
}

template <typename Fn>
void ForEachOperand(const Formula& f, const Fn& fn) {
  std::vector<Atom> atoms;
  CollectAtoms(f, atoms);
  for (const Atom& a : atoms) {
    fn(a.lhs);
    if (a.sub) fn(*a.sub);
    fn(a.rhs);
  }
}

Operand SubstituteOperand(const Operand& o, const Valuation& v) {
  if (!o.is_eliteral()) return o;
  auto it = v.find(o.term().text());
  if (it == v.end()) return o;
  return Operand(Term::Const(it->second), o.coord);
}

bool IsRdfTerm(const Term& t) {
  return t.is_iri() || t.is_blank() || t.is_plain_literal();
}

}  // namespace

bool IsTopological(Rel r) {
  return r == Rel::kDC || r == Rel::kEC || r == Rel::kPO || r == Rel::kTPP ||
         r == Rel::kNTPP;
}

bool IsOrder(Rel r) {
  return r == Rel::kLt || r == Rel::kLe || r == Rel::kGt || r == Rel::kGe;
}

std::strong_ordering operator<=>(const Operand& a, const Operand& b) {
  if (auto c = a.coord <=> b.coord; c != 0) return c;
  if (a.ref.index() != b.ref.index()) return a.ref.index() <=> b.ref.index();
  if (a.is_term()) return a.term() <=> b.term();
  return a.variable() <=> b.variable();
}

bool Atom::IsGround() const {
  auto ground = [](const Operand& o) {
    return o.is_term() && !o.term().is_eliteral();
  };
  return ground(lhs) && (!sub || ground(*sub)) && ground(rhs);
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.rel <=> b.rel; c != 0) return c;
  if (auto c = a.lhs <=> b.lhs; c != 0) return c;
  if (a.sub.has_value() != b.sub.has_value()) {
    return a.sub.has_value() <=> b.sub.has_value();
  }
  if (a.sub) {
    if (auto c = *a.sub <=> *b.sub; c != 0) return c;
  }
  return a.rhs <=> b.rhs;
}

Formula::Formula() : Formula(True()) {}

Formula Formula::True() {
  static const auto* node = new std::shared_ptr<const Node>(
      std::make_shared<Node>(Node{Kind::kTrue, Atom{}, {}}));
  return Formula(*node);
}

Formula Formula::False() {
  static const auto* node = new std::shared_ptr<const Node>(
      std::make_shared<Node>(Node{Kind::kFalse, Atom{}, {}}));
  return Formula(*node);
}

Formula Formula::Of(Atom atom) {
  return Formula(
      std::make_shared<Node>(Node{Kind::kAtom, std::move(atom), {}}));
}

Formula Formula::Not(Formula f) {
  switch (f.kind()) {
    case Kind::kTrue:
      return False();
    case Kind::kFalse:
      return True();
    case Kind::kNot:
      return f.children()[0];
    default:
      return Formula(std::make_shared<Node>(
          Node{Kind::kNot, Atom{}, std::vector<Formula>{std::move(f)}}));
  }
}

Formula Formula::Make(Kind kind, std::vector<Formula> children) {
  const Kind unit = kind == Kind::kAnd ? Kind::kTrue : Kind::kFalse;
  const Kind zero = kind == Kind::kAnd ? Kind::kFalse : Kind::kTrue;
  std::vector<Formula> flat;
  auto add = [&](const Formula& f) {
    if (f.kind() == unit) return true;
    if (f.kind() == zero) return false;
    if (std::find(flat.begin(), flat.end(), f) == flat.end()) {
      flat.push_back(f);
    }
    return true;
  };
  for (const Formula& c : children) {
    if (c.kind() == kind) {
      for (const Formula& g : c.children()) {
        if (!add(g)) return zero == Kind::kTrue ? True() : False();
      }
    } else if (!add(c)) {
      return zero == Kind::kTrue ? True() : False();
    }
  }
  if (flat.empty()) return unit == Kind::kTrue ? True() : False();
  if (flat.size() == 1) return flat[0];
  return Formula(std::make_shared<Node>(Node{kind, Atom{}, std::move(flat)}));
}

Formula Formula::And(std::vector<Formula> children) {
  return Make(Kind::kAnd, std::move(children));
}

Formula Formula::Or(std::vector<Formula> children) {
  return Make(Kind::kOr, std::move(children));
}

Formula Formula::Implies(Formula a, Formula b) {
  return Or(Not(std::move(a)), std::move(b));
}

Formula Formula::Conjunction(std::span<const Atom> atoms) {
  std::vector<Formula> kids;
  kids.reserve(atoms.size());
  for (const Atom& a : atoms) kids.push_back(Of(a));
  return And(std::move(kids));
}

bool operator==(const Formula& a, const Formula& b) {
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  if (a.kind() == Formula::Kind::kAtom) return a.atom() <=> b.atom();
  const auto& ca = a.children();
  const auto& cb = b.children();
  return std::lexicographical_compare_three_way(ca.begin(), ca.end(),
                                                cb.begin(), cb.end());
}

std::string AtomToString(const Atom& atom, Language lang) {
  std::string out = OperandToString(atom.lhs);
  if (atom.sub) out += " - " + OperandToString(*atom.sub);
  out += " ";
  out += RelText(atom, lang);
  out += " ";
  out += OperandToString(atom.rhs);
  return out;
}

std::string FormulaToString(const Formula& f, Language lang) {
  std::string out;
  AppendFormula(f, lang, false, out);
  return out;
}

void CollectAtoms(const Formula& f, std::vector<Atom>& out) {
  if (f.kind() == Formula::Kind::kAtom) {
    out.push_back(f.atom());
    return;
  }
  for (const Formula& c : f.children()) CollectAtoms(c, out);
}

void CollectELiterals(const Formula& f, std::set<std::string>& out) {
  ForEachOperand(f, [&](const Operand& o) {
    if (o.is_eliteral()) out.insert(o.term().text());
  });
}

void CollectConstants(const Formula& f, std::set<Constant>& out) {
  ForEachOperand(f, [&](const Operand& o) {
    if (o.is_constant()) out.insert(o.term().constant());
  });
}

void CollectVariables(const Formula& f, std::set<Variable>& out) {
  ForEachOperand(f, [&](const Operand& o) {
    if (o.is_variable()) out.insert(o.variable());
  });
}

Atom SubstituteELiterals(const Atom& a, const Valuation& v) {
  Atom out = a;
  out.lhs = SubstituteOperand(a.lhs, v);
  if (a.sub) out.sub = SubstituteOperand(*a.sub, v);
  out.rhs = SubstituteOperand(a.rhs, v);
  return out;
}

Formula SubstituteELiterals(const Formula& f, const Valuation& v) {
  if (v.empty()) return f;
  return MapAtoms(f, [&](const Atom& a) {
    return Formula::Of(SubstituteELiterals(a, v));
  });
}

Formula ReplaceELiteral(const Formula& f, const std::string& name,
                        const Term& replacement) {
  auto swap = [&](const Operand& o) {
    if (o.is_eliteral() && o.term().text() == name) {
      return Operand(replacement, o.coord);
    }
    return o;
  };
  return MapAtoms(f, [&](const Atom& a) {
    Atom out = a;
    out.lhs = swap(a.lhs);
    if (a.sub) out.sub = swap(*a.sub);
    out.rhs = swap(a.rhs);
    return Formula::Of(std::move(out));
  });
}

Formula BindVariables(const Formula& f, const Binding& binding) {
  return MapAtoms(f, [&](const Atom& a) {
    Atom out = a;
    bool unbound = false;
    auto bind = [&](const Operand& o) {
      if (!o.is_variable()) return o;
      auto it = binding.find(o.variable());
      if (it == binding.end()) {
        unbound = true;
        return o;
      }
      return Operand(it->second, o.coord);
    };
    out.lhs = bind(a.lhs);
    if (a.sub) out.sub = bind(*a.sub);
    out.rhs = bind(a.rhs);
    if (unbound) return Formula::False();
    const bool lhs_rdf = IsRdfTerm(out.lhs.term());
    const bool rhs_rdf = IsRdfTerm(out.rhs.term());
    const bool sub_rdf = out.sub && IsRdfTerm(out.sub->term());
    if (!lhs_rdf && !rhs_rdf && !sub_rdf) return Formula::Of(std::move(out));
    const bool plain_compare = (a.rel == Rel::kEq || a.rel == Rel::kNeq) &&
                               !a.sub && a.lhs.coord == Coord::kNone &&
                               a.rhs.coord == Coord::kNone && lhs_rdf &&
                               rhs_rdf;
    if (!plain_compare) return Formula::False();
    const bool same = out.lhs.term() == out.rhs.term();
    return (a.rel == Rel::kEq) == same ? Formula::True() : Formula::False();
  });
}

}  // namespace rdfi
