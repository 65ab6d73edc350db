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

#ifndef RDFI_RCC8_H_
#define RDFI_RCC8_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "rdfi/polygon.h"

namespace rdfi {

// The eight jointly exhaustive, pairwise disjoint base relations.
enum class Rcc8 : uint8_t { kDC, kEC, kPO, kEQ, kTPP, kNTPP, kTPPi, kNTPPi };

inline constexpr int kNumRcc8 = 8;

// Bit i set iff base relation i is allowed.
using Rcc8Set = uint8_t;
inline constexpr Rcc8Set kAllRcc8 = 0xFF;

constexpr Rcc8Set Bit(Rcc8 r) { return Rcc8Set(1u << static_cast<int>(r)); }

std::string_view Rcc8Name(Rcc8 r);
Rcc8 Converse(Rcc8 r);
Rcc8Set ConverseSet(Rcc8Set s);

// Weak composition of base relations: the set of relations r(a,c) possible
// given r1(a,b) and r2(b,c).
Rcc8Set ComposeBase(Rcc8 r1, Rcc8 r2);
Rcc8Set Compose(Rcc8Set s1, Rcc8Set s2);

// Decided with exact arithmetic. Two boxes take an interval fast path.
Rcc8 Rcc8Relation(const Polygon& p, const Polygon& q);

// Dense constraint network. Invariants: edge(i,j) == ConverseSet(edge(j,i))
// and edge(i,i) is a subset of {EQ}.
class Rcc8Network {
 public:
  explicit Rcc8Network(int size);

  int size() const { return size_; }
  Rcc8Set edge(int i, int j) const { return edges_[i * size_ + j]; }

  // Intersects edge(i,j) with s and edge(j,i) with its converse. Returns false
  // iff the edge became empty.
  bool Constrain(int i, int j, Rcc8Set s);

  // Overwrites edge(i,j) and its converse.
  void Set(int i, int j, Rcc8Set s);

  friend bool operator==(const Rcc8Network&, const Rcc8Network&) = default;

 private:
  int size_;
  std::vector<Rcc8Set> edges_;
};

// Refines every edge to edge(i,j) & (edge(i,k) o edge(k,j)) until fixpoint.
// Returns false iff some edge becomes empty.
bool PathConsistency(Rcc8Network& network);

}  // namespace rdfi

#endif  // RDFI_RCC8_H_
