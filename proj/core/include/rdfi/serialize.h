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

#ifndef RDFI_SERIALIZE_H_
#define RDFI_SERIALIZE_H_

#include <set>
#include <string>
#include <vector>

#include "rdfi/database.h"
#include "rdfi/oracle.h"
#include "rdfi/query.h"

namespace rdfi {

// All output is deterministic and accepted by the matching parser.

std::string SerializeDatabase(const Database& db);
std::string SerializeQuery(const Query& q);
std::string SerializePattern(const GraphPattern& p);
std::string SerializeDomainSpec(const DomainSpec& dom);

// Solutions ordered by binding text, then condition text.
std::string SerializeSelectText(const SelectAnswer& answer);
std::string SerializeSelectJson(const SelectAnswer& answer);

std::string SerializeConstructJson(const Database& answer);

// One "s p o ." line per triple, sorted by line text.
std::string SerializeTriples(const Graph& graph);

std::string BindingToString(const Binding& b);
// One "{?x -> t, ...}" line per binding, sorted by line text.
std::string SerializeBindings(const std::set<Binding>& bindings);

std::string SerializeWorlds(const std::vector<World>& worlds);

}  // namespace rdfi

#endif  // RDFI_SERIALIZE_H_
