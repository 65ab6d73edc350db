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

#ifndef RDFI_TESTS_SUPPORT_FIXTURES_H_
#define RDFI_TESTS_SUPPORT_FIXTURES_H_

#include <string>

#include "rdfi/algebra.h"
#include "rdfi/certain.h"
#include "rdfi/database.h"
#include "rdfi/oracle.h"
#include "rdfi/query.h"

namespace rdfi::testing {

// The box [x1, x2] x [y1, y2] as a term.
Term Box(int x1, int y1, int x2, int y2);

Term Iri(const std::string& name);
Term Lit(const std::string& name);
Variable Var(const std::string& name);
Variable Special(const std::string& name);
Formula Rcc(const Term& a, Rel rel, const Term& b);

// Hotspot database: four true-conditioned triples, the fire region
// constrained NTPP to R(6,8,23,19).
Database HotspotDatabase();

// The same with a disjunctive global constraint and a second fire located
// exactly at R(6,8,23,19).
Database DisjunctiveHotspotDatabase();

// Sample e-mappings: 1 binds ?S to a constant, 2 and 3 to _e:R1 (3 with a
// condition on an auxiliary region), 4 binds only ?F.
ConditionalMapping SampleMapping(int i);
Binding SampleBinding(int i);

// Fires located NTPP within the box, projected on ?F or constructed as
// (?F type Fire).
GraphPattern FireInBoxPattern(const Term& box);
SelectQuery FireInBoxSelect(const Term& box);
ConstructQuery FireInBoxConstruct(const Term& box);

// Three candidate regions for _e:R1; one violates the global constraint.
DomainSpec HotspotDomain();

// Whether a and b are equivalent given the language's theory.
bool Equivalent(const Formula& a, const Formula& b, Language lang);

// Set equality of mapping sets up to equivalent conditions.
bool EquivalentMappings(const MappingSet& a, const MappingSet& b,
                        Language lang);

// Read a file under tests/data.
std::string ReadDataFile(const std::string& name);

}  // namespace rdfi::testing

#endif  // RDFI_TESTS_SUPPORT_FIXTURES_H_
