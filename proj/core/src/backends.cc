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

#include "rdfi/backends.h"

#include <stdexcept>

#include "rdfi/difference.h"
#include "rdfi/ecl.h"
#include "rdfi/pcl.h"
#include "rdfi/rcc8.h"

namespace rdfi {
namespace {

const Constant& GroundValue(const Operand& o) {
  if (!o.is_constant()) {
    throw std::logic_error("operand is not a constant");
  }
  return o.term().constant();
}

Rational Scalar(const Operand& o) {
  const Constant& c = GroundValue(o);
  if (o.coord == Coord::kNone) {
    if (!c.is_number()) throw std::logic_error("region used as a number");
    return c.number();
  }
  const Polygon& box = c.region();
  switch (o.coord) {
    case Coord::kLLx:
      return box.min_x();
    case Coord::kLLy:
      return box.min_y();
    case Coord::kURx:
      return box.max_x();
    case Coord::kURy:
      return box.max_y();
    case Coord::kNone:
      break;
  }
  return 0;
}

bool CompareScalars(const Rational& a, Rel rel, const Rational& b) {
  switch (rel) {
    case Rel::kEq:
      return a == b;
    case Rel::kNeq:
      return a != b;
    case Rel::kLt:
      return a < b;
    case Rel::kLe:
      return a <= b;
    case Rel::kGt:
      return a > b;
    case Rel::kGe:
      return a >= b;
    default:
      throw std::logic_error("not a scalar relation");
  }
}

Rcc8 ToRcc8(Rel r) {
  switch (r) {
    case Rel::kEq:
      return Rcc8::kEQ;
    case Rel::kDC:
      return Rcc8::kDC;
    case Rel::kEC:
      return Rcc8::kEC;
    case Rel::kPO:
      return Rcc8::kPO;
    case Rel::kTPP:
      return Rcc8::kTPP;
    case Rel::kNTPP:
      return Rcc8::kNTPP;
    default:
      throw std::logic_error("not a topological relation");
  }
}

std::set<std::string> ELiteralsOfAtoms(std::span<const Atom> atoms) {
  std::set<std::string> out;
  for (const Atom& a : atoms) {
    for (const Operand* o : {&a.lhs, a.sub ? &*a.sub : nullptr, &a.rhs}) {
      if (o && o->is_eliteral()) out.insert(o->term().text());
    }
  }
  return out;
}

Polygon BoxFromScalars(const std::map<std::string, Rational>& values,
                       const std::string& box) {
  return Polygon::Box(values.at(BoxCoordName(box, Coord::kLLx)),
                      values.at(BoxCoordName(box, Coord::kLLy)),
                      values.at(BoxCoordName(box, Coord::kURx)),
                      values.at(BoxCoordName(box, Coord::kURy)));
}

}  // namespace

bool ConjunctionSatisfiable(Language lang, std::span<const Atom> atoms) {
  switch (lang) {
    case Language::kEcl:
      return EclSatisfiable(atoms);
    case Language::kDiPcl:
    case Language::kDePcl:
      return DiffSatisfiable(
          LowerDifference(atoms, lang == Language::kDiPcl));
    case Language::kRcl:
      return DiffSatisfiable(LowerRcl(atoms));
    case Language::kPcl:
    case Language::kTcl:
      return PclSatisfiable(atoms);
  }
  return false;
}

std::optional<Valuation> ConjunctionWitness(Language lang,
                                            std::span<const Atom> atoms,
                                            const std::set<std::string>& lits) {
  std::set<std::string> all = ELiteralsOfAtoms(atoms);
  all.insert(lits.begin(), lits.end());
  switch (lang) {
    case Language::kEcl:
      return EclWitness(atoms, all);
    case Language::kDiPcl:
    case Language::kDePcl: {
      DiffConjunction c = LowerDifference(atoms, lang == Language::kDiPcl);
      c.variables.insert(all.begin(), all.end());
      auto values = DiffWitness(c);
      if (!values) return std::nullopt;
      Valuation out;
      for (const std::string& l : all) out[l] = Constant(values->at(l));
      return out;
    }
    case Language::kRcl: {
      auto values = DiffWitness(LowerRcl(atoms, all));
      if (!values) return std::nullopt;
      Valuation out;
      for (const std::string& l : all) out[l] = Constant(BoxFromScalars(*values, l));
      return out;
    }
    case Language::kPcl:
    case Language::kTcl:
      return PclWitness(atoms, all);
  }
  return std::nullopt;
}

Valuation ForcedInConjunction(Language lang, std::span<const Atom> atoms) {
  switch (lang) {
    case Language::kEcl:
      return EclForcedValues(atoms);
    case Language::kDiPcl:
    case Language::kDePcl: {
      Valuation out;
      for (auto& [name, value] :
           DiffForcedValues(LowerDifference(atoms, lang == Language::kDiPcl))) {
        out[name] = Constant(value);
      }
      return out;
    }
    case Language::kRcl: {
      const std::set<std::string> boxes = ELiteralsOfAtoms(atoms);
      const auto values = DiffForcedValues(LowerRcl(atoms));
      Valuation out;
      for (const std::string& b : boxes) {
        bool all = true;
        for (Coord c : {Coord::kLLx, Coord::kLLy, Coord::kURx, Coord::kURy}) {
          if (!values.count(BoxCoordName(b, c))) all = false;
        }
        if (all) out[b] = Constant(BoxFromScalars(values, b));
      }
      return out;
    }
    case Language::kPcl:
    case Language::kTcl:
      return PclForcedValues(atoms);
  }
  return {};
}

bool EvaluateGroundAtom(const Atom& atom, Language lang) {
  if (IsTopologicalLanguage(lang)) {
    return Rcc8Relation(GroundValue(atom.lhs).region(),
                        GroundValue(atom.rhs).region()) == ToRcc8(atom.rel);
  }
  if (lang == Language::kEcl) {
    const bool same = GroundValue(atom.lhs) == GroundValue(atom.rhs);
    return atom.rel == Rel::kEq ? same : !same;
  }
  if (lang == Language::kRcl && !atom.sub && atom.lhs.coord == Coord::kNone &&
      atom.rhs.coord == Coord::kNone && GroundValue(atom.lhs).is_region()) {
    return GroundValue(atom.lhs) == GroundValue(atom.rhs);
  }
  Rational lhs = Scalar(atom.lhs);
  if (atom.sub) lhs -= Scalar(*atom.sub);
  return CompareScalars(lhs, atom.rel, Scalar(atom.rhs));
}

bool EvaluateGround(const Formula& f, Language lang) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return true;
    case Formula::Kind::kFalse:
      return false;
    case Formula::Kind::kAtom:
      return EvaluateGroundAtom(f.atom(), lang);
    case Formula::Kind::kNot:
      return !EvaluateGround(f.children()[0], lang);
    case Formula::Kind::kAnd:
      for (const Formula& c : f.children()) {
        if (!EvaluateGround(c, lang)) return false;
      }
      return true;
    case Formula::Kind::kOr:
      for (const Formula& c : f.children()) {
        if (EvaluateGround(c, lang)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace rdfi
