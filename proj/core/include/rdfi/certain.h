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

#ifndef RDFI_CERTAIN_H_
#define RDFI_CERTAIN_H_

#include <set>

#include "rdfi/database.h"
#include "rdfi/query.h"

namespace rdfi {

// Replaces every e-literal whose value is forced by the global constraint,
// in triple objects and graph conditions. Throws Error(kUnsatGlobal).
Database EqComplete(const Database& db);

// Merges conditional triples with the same triple into one disjunction.
Database Normalize(const Database& db);

// Throws Error(kUnsupportedFragment) unless the pattern is AUF or well
// designed and the template is blank free.
void RequireCertainFragment(const ConstructQuery& q);

// Ground triples present in every world of the answer. Throws
// kUnsupportedFragment or kUnsatGlobal.
Graph CertainAnswer(const ConstructQuery& q, const Database& db);

// Whether every triple of the ground graph h is certain. Throws
// kUnsupportedFragment, kUnsatGlobal, or kIllFormedTriple for non-ground h.
bool Certainty(const ConstructQuery& q, const Graph& h, const Database& db);

// Ground mappings, restricted to the projection, present in the answer of
// every world.
std::set<Binding> SelectCertainAnswer(const SelectQuery& q,
                                      const Database& db);

}  // namespace rdfi

#endif  // RDFI_CERTAIN_H_
