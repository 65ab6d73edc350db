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

#ifndef RDFI_PCL_H_
#define RDFI_PCL_H_

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rdfi/formula.h"
#include "rdfi/rcc8.h"

namespace rdfi {

// An RCC-8 network over e-literals and polygon landmarks.
struct PclNetwork {
  std::vector<std::string> variables;  // nodes [0, variables.size())
  std::vector<Polygon> landmarks;      // the following nodes
  Rcc8Network network{0};

  int landmark_node(size_t i) const {
    return static_cast<int>(variables.size() + i);
  }
};

// Builds the network of a conjunction of topological atoms. Landmark pairs
// receive their geometric relation. Extra variables become isolated nodes.
PclNetwork BuildPclNetwork(std::span<const Atom> atoms,
                           const std::set<std::string>& extra_variables = {});

// Path consistency followed by backtracking over non-singleton edges. Complete
// without landmarks; with landmarks a consistent scenario need not be
// realizable.
bool PclSatisfiable(std::span<const Atom> atoms);

// Searches rectangles on a grid derived from the landmark coordinates, refined
// a bounded number of times. Returns nullopt iff the network is inconsistent
// and throws Error(kNoWitness) when the search gives up.
std::optional<Valuation> PclWitness(std::span<const Atom> atoms,
                                    const std::set<std::string>& lits);

// E-literals whose edge to some landmark is EQ after path consistency.
Valuation PclForcedValues(std::span<const Atom> atoms);

// Calls visit on each base-relation refinement of the network that is path
// consistent, until visit returns true. Returns whether it did.
bool ForEachConsistentScenario(
    const Rcc8Network& network,
    const std::function<bool(const Rcc8Network&)>& visit);

}  // namespace rdfi

#endif  // RDFI_PCL_H_
