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

#ifndef RDFI_BACKENDS_H_
#define RDFI_BACKENDS_H_

#include <optional>
#include <set>
#include <span>
#include <string>

#include "rdfi/formula.h"
#include "rdfi/language.h"

namespace rdfi {

// Decides a conjunction of positive atoms of the language. Negated atoms are
// expected to be expanded beforehand.
bool ConjunctionSatisfiable(Language lang, std::span<const Atom> atoms);

// A valuation over lits and every e-literal of the atoms that satisfies the
// conjunction; nullopt iff unsatisfiable. Throws Error(kNoWitness) when the
// topological model search gives up.
std::optional<Valuation> ConjunctionWitness(Language lang,
                                            std::span<const Atom> atoms,
                                            const std::set<std::string>& lits);

// E-literals whose value is fixed by a satisfiable conjunction. Sound; for
// the topological languages only equalities with landmarks are detected.
Valuation ForcedInConjunction(Language lang, std::span<const Atom> atoms);

// Truth of an atom without e-literals or variables in the intended structure.
bool EvaluateGroundAtom(const Atom& atom, Language lang);

// Truth of a formula whose atoms are all ground.
bool EvaluateGround(const Formula& f, Language lang);

}  // namespace rdfi

#endif  // RDFI_BACKENDS_H_
