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

#ifndef RDFI_CONSTRAINT_H_
#define RDFI_CONSTRAINT_H_

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rdfi/formula.h"
#include "rdfi/language.h"

namespace rdfi {

using Conjunction = std::vector<Atom>;

// A disjunction of positive atoms equivalent to the negation of the atom.
// Throws Error(kNotClosed) when the relation is foreign to the language.
std::vector<Atom> NegateAtom(const Atom& atom, Language lang);

// Syntactic disjunctive normal form with negations pushed through NegateAtom.
// An empty result means false; an empty conjunction means true.
std::vector<Conjunction> ToDnf(const Formula& f, Language lang);

// Negation normal form whose leaves are positive atoms.
Formula PositiveNnf(const Formula& f, Language lang);

// Visits the satisfiable disjuncts of f, pruning unsatisfiable partial
// branches. Stops as soon as visit returns true and reports whether it did.
bool ForEachSatisfiableDisjunct(
    const Formula& f, Language lang,
    const std::function<bool(std::span<const Atom>)>& visit);

bool Satisfiable(const Formula& f, Language lang);

// phi |= theta, decided as unsatisfiability of phi && !theta.
bool Entails(const Formula& phi, const Formula& theta, Language lang);

// A valuation over lits and the e-literals of f that makes f true; nullopt
// iff f is unsatisfiable. Throws Error(kNoWitness) if the topological model
// search gives up on every satisfiable disjunct.
std::optional<Valuation> Solve(const Formula& f, Language lang,
                               const std::set<std::string>& lits);

// The unique constant c with phi |= lit EQ c, if any. Throws
// Error(kUnsatGlobal) if phi is unsatisfiable.
std::optional<Constant> ForcedConstant(const Formula& phi,
                                       const std::string& lit, Language lang);

// lit EQ c in the syntax of the language.
Atom EqAtom(const Term& lhs, const Term& rhs);

}  // namespace rdfi

#endif  // RDFI_CONSTRAINT_H_
