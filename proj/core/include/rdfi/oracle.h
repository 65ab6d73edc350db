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

#ifndef RDFI_ORACLE_H_
#define RDFI_ORACLE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rdfi/algebra.h"
#include "rdfi/database.h"
#include "rdfi/query.h"

namespace rdfi {

// Finite candidate values per e-literal.
using DomainSpec = std::map<std::string, std::vector<Constant>>;

// A possible world is a ground RDF graph.
using World = Graph;

Triple ApplyValuation(const Valuation& v, const Triple& t);

// Triples whose condition holds under v, with e-literals replaced.
World ApplyValuationGraph(const Valuation& v,
                          const std::vector<ConditionalTriple>& graph,
                          Language lang);

// Bindings of the mappings whose condition holds under v.
std::set<Binding> ApplyValuationMappings(const Valuation& v,
                                         const MappingSet& mappings,
                                         Language lang);

// Valuations over dom, restricted to the e-literals of db, satisfying the
// global constraint. Throws Error(kMissingDomain) if dom misses one of them
// and Error(kLanguageMismatch) for candidates of the wrong sort.
std::vector<Valuation> EnumerateValuations(const Database& db,
                                           const DomainSpec& dom);

// Minimal worlds, sorted and duplicate free. Throws Error(kEmptyWorldSet)
// when no valuation satisfies the global constraint.
std::vector<World> EnumerateWorlds(const Database& db, const DomainSpec& dom);

// Standard set semantics over a ground graph. FILTER atoms are decided
// eagerly; atoms over unbound variables are false.
std::set<Binding> StdEvalPattern(const GraphPattern& pattern,
                                 const World& world, Language lang);
std::set<Binding> StdEvalSelect(const SelectQuery& q, const World& world,
                                Language lang);
World StdEvalConstruct(const ConstructQuery& q, const World& world,
                       Language lang);

// Intersection of the answers over all minimal worlds. Only meaningful for
// monotone queries.
World OracleCertainConstruct(const ConstructQuery& q, const Database& db,
                             const DomainSpec& dom);
std::set<Binding> OracleCertainSelect(const SelectQuery& q,
                                      const Database& db,
                                      const DomainSpec& dom);

// Every graph of each list contains some graph of the other.
bool Coinitial(const std::vector<World>& gs, const std::vector<World>& hs);

// Triples common to all graphs; empty for an empty list.
World Intersection(const std::vector<World>& worlds);

// Conjoins the global constraint with a disjunction of the candidates of
// each e-literal, so symbolic reasoning ranges over dom only.
Database RestrictToDomain(const Database& db, const DomainSpec& dom);

}  // namespace rdfi

#endif  // RDFI_ORACLE_H_
