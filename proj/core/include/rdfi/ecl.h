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

#ifndef RDFI_ECL_H_
#define RDFI_ECL_H_

#include <optional>
#include <set>
#include <span>
#include <string>

#include "rdfi/formula.h"

namespace rdfi {

// Conjunctions of x = y, x = c, x != y, x != c over e-literals and integer
// constants, interpreted over an infinite domain.
bool EclSatisfiable(std::span<const Atom> atoms);

// Classes holding a constant take it; other classes take distinct fresh
// integers. Nullopt iff unsatisfiable.
std::optional<Valuation> EclWitness(std::span<const Atom> atoms,
                                    const std::set<std::string>& lits);

// E-literals equated with a constant. Requires a satisfiable conjunction.
Valuation EclForcedValues(std::span<const Atom> atoms);

}  // namespace rdfi

#endif  // RDFI_ECL_H_
