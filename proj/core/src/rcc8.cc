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

#include "rdfi/rcc8.h"

#include <array>
#include <deque>

namespace rdfi {
namespace {

constexpr Rcc8Set DC = Bit(Rcc8::kDC);
constexpr Rcc8Set EC = Bit(Rcc8::kEC);
constexpr Rcc8Set PO = Bit(Rcc8::kPO);
constexpr Rcc8Set EQ = Bit(Rcc8::kEQ);
constexpr Rcc8Set TPP = Bit(Rcc8::kTPP);
constexpr Rcc8Set NTPP = Bit(Rcc8::kNTPP);
constexpr Rcc8Set TPPi = Bit(Rcc8::kTPPi);
constexpr Rcc8Set NTPPi = Bit(Rcc8::kNTPPi);
constexpr Rcc8Set ALL = kAllRcc8;

// Row r1, column r2, in enum order DC EC PO EQ TPP NTPP TPPi NTPPi.
constexpr Rcc8Set kTable[8][8] = {
    // DC
    {ALL, DC | EC | PO | TPP | NTPP, DC | EC | PO | TPP | NTPP, DC,
     DC | EC | PO | TPP | NTPP, DC | EC | PO | TPP | NTPP, DC, DC},
    // EC
    {DC | EC | PO | TPPi | NTPPi, DC | EC | PO | TPP | TPPi | EQ,
     DC | EC | PO | TPP | NTPP, EC, EC | PO | TPP | NTPP, PO | TPP | NTPP,
     DC | EC, DC},
    // PO
    {DC | EC | PO | TPPi | NTPPi, DC | EC | PO | TPPi | NTPPi, ALL, PO,
     PO | TPP | NTPP, PO | TPP | NTPP, DC | EC | PO | TPPi | NTPPi,
     DC | EC | PO | TPPi | NTPPi},
    // EQ
    {DC, EC, PO, EQ, TPP, NTPP, TPPi, NTPPi},
    // TPP
    {DC, DC | EC, DC | EC | PO | TPP | NTPP, TPP, TPP | NTPP, NTPP,
     DC | EC | PO | TPP | TPPi | EQ, DC | EC | PO | TPPi | NTPPi},
    // NTPP
    {DC, DC, DC | EC | PO | TPP | NTPP, NTPP, NTPP, NTPP,
     DC | EC | PO | TPP | NTPP, ALL},
    // TPPi
    {DC | EC | PO | TPPi | NTPPi, EC | PO | TPPi | NTPPi, PO | TPPi | NTPPi,
     TPPi, PO | EQ | TPP | TPPi, PO | TPP | NTPP, TPPi | NTPPi, NTPPi},
    // NTPPi
    {DC | EC | PO | TPPi | NTPPi, PO | TPPi | NTPPi, PO | TPPi | NTPPi,
     NTPPi, PO | TPPi | NTPPi, PO | TPP | NTPP | TPPi | NTPPi | EQ, NTPPi,
     NTPPi},
};

const std::array<std::array<Rcc8Set, 256>, 256>& SetTable() {
  static const auto* table = [] {
    auto* t = new std::array<std::array<Rcc8Set, 256>, 256>();
    for (int a = 0; a < 256; ++a) {
      for (int b = 0; b < 256; ++b) {
        Rcc8Set out = 0;
        for (int i = 0; i < 8; ++i) {
          if (!(a & (1 << i))) continue;
          for (int j = 0; j < 8; ++j) {
            if (b & (1 << j)) out |= kTable[i][j];
          }
        }
        (*t)[a][b] = out;
      }
    }
    return t;
  }();
  return *table;
}

Rcc8 BoxRelation(const Polygon& p, const Polygon& q) {
  const Rational &ax1 = p.min_x(), &ax2 = p.max_x(), &ay1 = p.min_y(),
                 &ay2 = p.max_y();
  const Rational &bx1 = q.min_x(), &bx2 = q.max_x(), &by1 = q.min_y(),
                 &by2 = q.max_y();
  if (ax2 < bx1 || bx2 < ax1 || ay2 < by1 || by2 < ay1) return Rcc8::kDC;
  if (ax2 == bx1 || bx2 == ax1 || ay2 == by1 || by2 == ay1) return Rcc8::kEC;
  if (ax1 == bx1 && ax2 == bx2 && ay1 == by1 && ay2 == by2) return Rcc8::kEQ;
  if (bx1 <= ax1 && ax2 <= bx2 && by1 <= ay1 && ay2 <= by2) {
    return (bx1 < ax1 && ax2 < bx2 && by1 < ay1 && ay2 < by2) ? Rcc8::kNTPP
                                                              : Rcc8::kTPP;
  }
  if (ax1 <= bx1 && bx2 <= ax2 && ay1 <= by1 && by2 <= ay2) {
    return (ax1 < bx1 && bx2 < ax2 && ay1 < by1 && by2 < ay2) ? Rcc8::kNTPPi
                                                              : Rcc8::kTPPi;
  }
  return Rcc8::kPO;
}

// 0: outside, 1: all vertices inside, 2: all strictly inside.
int Containment(const Polygon& inner, const Polygon& outer) {
  bool strict = true;
  for (const Point& v : inner.vertices()) {
    for (const HalfSpace& h : outer.half_spaces()) {
      if (!h.Contains(v)) return 0;
      if (!h.ContainsStrictly(v)) strict = false;
    }
  }
  return strict ? 2 : 1;
}

}  // namespace

std::string_view Rcc8Name(Rcc8 r) {
  static constexpr std::string_view kNames[] = {"DC",  "EC",   "PO",   "EQ",
                                                "TPP", "NTPP", "TPPi", "NTPPi"};
  return kNames[static_cast<int>(r)];
}

Rcc8 Converse(Rcc8 r) {
  switch (r) {
    case Rcc8::kTPP:
      return Rcc8::kTPPi;
    case Rcc8::kNTPP:
      return Rcc8::kNTPPi;
    case Rcc8::kTPPi:
      return Rcc8::kTPP;
    case Rcc8::kNTPPi:
      return Rcc8::kNTPP;
    default:
      return r;
  }
}

Rcc8Set ConverseSet(Rcc8Set s) {
  Rcc8Set out = 0;
  for (int i = 0; i < kNumRcc8; ++i) {
    if (s & (1 << i)) out |= Bit(Converse(static_cast<Rcc8>(i)));
  }
  return out;
}

Rcc8Set ComposeBase(Rcc8 r1, Rcc8 r2) {
  return kTable[static_cast<int>(r1)][static_cast<int>(r2)];
}

Rcc8Set Compose(Rcc8Set s1, Rcc8Set s2) { return SetTable()[s1][s2]; }

Rcc8 Rcc8Relation(const Polygon& p, const Polygon& q) {
  if (p.is_box() && q.is_box()) return BoxRelation(p, q);
  if (p == q) return Rcc8::kEQ;
  if (int c = Containment(p, q); c != 0) {
    return c == 2 ? Rcc8::kNTPP : Rcc8::kTPP;
  }
  if (int c = Containment(q, p); c != 0) {
    return c == 2 ? Rcc8::kNTPPi : Rcc8::kTPPi;
  }
  std::vector<HalfSpace> both(p.half_spaces());
  both.insert(both.end(), q.half_spaces().begin(), q.half_spaces().end());
  const std::vector<Point> meet = FeasibleHull(both);
  if (meet.empty()) return Rcc8::kDC;
  if (meet.size() < 3) return Rcc8::kEC;
  return Rcc8::kPO;
}

Rcc8Network::Rcc8Network(int size)
    : size_(size), edges_(static_cast<size_t>(size) * size, kAllRcc8) {
  for (int i = 0; i < size; ++i) edges_[i * size + i] = EQ;
}

bool Rcc8Network::Constrain(int i, int j, Rcc8Set s) {
  Rcc8Set& e = edges_[i * size_ + j];
  e &= s;
  if (i != j) edges_[j * size_ + i] = ConverseSet(e);
  return e != 0;
}

void Rcc8Network::Set(int i, int j, Rcc8Set s) {
  edges_[i * size_ + j] = s;
  if (i != j) edges_[j * size_ + i] = ConverseSet(s);
}

bool PathConsistency(Rcc8Network& network) {
  const int n = network.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (network.edge(i, j) == 0) return false;
    }
  }
  std::deque<std::pair<int, int>> queue;
  std::vector<char> queued(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      queue.emplace_back(i, j);
      queued[i * n + j] = 1;
    }
  }
  auto revise = [&](int a, int b, Rcc8Set with) {
    const Rcc8Set before = network.edge(a, b);
    const Rcc8Set after = before & with;
    if (after == before) return true;
    network.Set(a, b, after);
    if (after == 0) return false;
    const int lo = std::min(a, b), hi = std::max(a, b);
    if (!queued[lo * n + hi]) {
      queued[lo * n + hi] = 1;
      queue.emplace_back(lo, hi);
    }
    return true;
  };
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    queued[i * n + j] = 0;
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      if (!revise(i, k, Compose(network.edge(i, j), network.edge(j, k)))) {
        return false;
      }
      if (!revise(k, j, Compose(network.edge(k, i), network.edge(i, j)))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace rdfi
