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

#ifndef RDFI_DIFFERENCE_H_
#define RDFI_DIFFERENCE_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rdfi/formula.h"

namespace rdfi {

// x - y rel c over scalar variables. An empty name stands for the constant 0,
// so x rel c is {x, "", rel, c}. rel is one of < <= = >= >.
struct DiffAtom {
  std::string x;
  std::string y;
  Rel rel = Rel::kLe;
  Rational c;
};

struct DiffConjunction {
  bool integer = false;
  std::vector<DiffAtom> atoms;
  // Set when a ground atom folded to false during lowering.
  bool contradiction = false;
  // Variables that must receive a value even if unconstrained.
  std::set<std::string> variables;
};

// Lowers diPCL or dePCL atoms over e-literals and numeric constants.
DiffConjunction LowerDifference(std::span<const Atom> atoms, bool integer);

// Lowers rectangle atoms. Each box e-literal r becomes the scalars
// "r#LLx", "r#LLy", "r#URx", "r#URy", constrained by LLx(r) - URx(r) < 0 and
// LLy(r) - URy(r) < 0. Boxes listed in extra_boxes are declared as well.
DiffConjunction LowerRcl(std::span<const Atom> atoms,
                         const std::set<std::string>& extra_boxes = {});

// Scalar name of a box coordinate, as produced by LowerRcl.
std::string BoxCoordName(const std::string& box, Coord coord);

bool DiffSatisfiable(const DiffConjunction& c);

// A satisfying assignment for every variable of the conjunction, verified
// exactly before it is returned. Nullopt iff unsatisfiable.
std::optional<std::map<std::string, Rational>> DiffWitness(
    const DiffConjunction& c);

// Variables whose value is the same in every solution. Requires a
// satisfiable conjunction.
std::map<std::string, Rational> DiffForcedValues(const DiffConjunction& c);

// Evaluates x - y rel c under the assignment.
bool DiffAtomHolds(const DiffAtom& a,
                   const std::map<std::string, Rational>& values);

}  // namespace rdfi

#endif  // RDFI_DIFFERENCE_H_
