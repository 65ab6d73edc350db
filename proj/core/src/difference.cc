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

#include "rdfi/difference.h"

#include <stdexcept>

namespace rdfi {
namespace {

// Path weight c - k*epsilon for an infinitesimal epsilon > 0.
struct Weight {
  Rational c;
  int k = 0;
};

bool Less(const Weight& a, const Weight& b) {
  const int cmp_c = cmp(a.c, b.c);
  return cmp_c < 0 || (cmp_c == 0 && a.k > b.k);
}

Weight Add(const Weight& a, const Weight& b) { return {a.c + b.c, a.k + b.k}; }

Rel Flip(Rel r) {
  switch (r) {
    case Rel::kLt:
      return Rel::kGt;
    case Rel::kLe:
      return Rel::kGe;
    case Rel::kGt:
      return Rel::kLt;
    case Rel::kGe:
      return Rel::kLe;
    default:
      return r;
  }
}

bool Compare(const Rational& lhs, Rel rel, const Rational& rhs) {
  switch (rel) {
    case Rel::kLt:
      return lhs < rhs;
    case Rel::kLe:
      return lhs <= rhs;
    case Rel::kEq:
      return lhs == rhs;
    case Rel::kGe:
      return lhs >= rhs;
    case Rel::kGt:
      return lhs > rhs;
    case Rel::kNeq:
      return lhs != rhs;
    default:
      throw std::logic_error("not an order relation");
  }
}

Rational BoxCoord(const Polygon& box, Coord coord) {
  switch (coord) {
    case Coord::kLLx:
      return box.min_x();
    case Coord::kLLy:
      return box.min_y();
    case Coord::kURx:
      return box.max_x();
    case Coord::kURy:
      return box.max_y();
    case Coord::kNone:
      break;
  }
  throw std::logic_error("box operand without coordinate");
}

struct Linear {
  std::vector<std::pair<int, std::string>> symbols;  // sign, name
  Rational k;
};

void AddOperand(const Operand& o, int sign, Linear& out) {
  if (!o.is_term()) throw std::logic_error("unbound variable in constraint");
  const Term& t = o.term();
  if (t.is_eliteral()) {
    out.symbols.emplace_back(sign, o.coord == Coord::kNone
                                       ? t.text()
                                       : BoxCoordName(t.text(), o.coord));
    return;
  }
  if (!t.is_constant()) throw std::logic_error("non-numeric operand");
  const Constant& c = t.constant();
  const Rational v =
      c.is_number() ? c.number() : BoxCoord(c.region(), o.coord);
  out.k += sign * v;
}

// Appends lhs - sub - rhs rel 0 as a DiffAtom, or folds a ground atom.
void LowerLinear(const Atom& a, DiffConjunction& out) {
  if (!IsOrder(a.rel) && a.rel != Rel::kEq) {
    throw std::logic_error("not a difference relation");
  }
  Linear lin;
  AddOperand(a.lhs, 1, lin);
  if (a.sub) AddOperand(*a.sub, -1, lin);
  AddOperand(a.rhs, -1, lin);
  // Cancel x - x.
  if (lin.symbols.size() == 2 && lin.symbols[0].second == lin.symbols[1].second &&
      lin.symbols[0].first != lin.symbols[1].first) {
    lin.symbols.clear();
  }
  for (const auto& s : lin.symbols) out.variables.insert(s.second);
  const Rational rhs = -lin.k;
  if (lin.symbols.empty()) {
    if (!Compare(Rational(0), a.rel, rhs)) out.contradiction = true;
    return;
  }
  if (lin.symbols.size() == 1) {
    const auto& [sign, name] = lin.symbols[0];
    if (sign > 0) {
      out.atoms.push_back(DiffAtom{name, "", a.rel, rhs});
    } else {
      out.atoms.push_back(DiffAtom{name, "", Flip(a.rel), -rhs});
    }
    return;
  }
  if (lin.symbols.size() != 2 || lin.symbols[0].first == lin.symbols[1].first) {
    throw std::logic_error("not a difference constraint");
  }
  const auto& pos = lin.symbols[0].first > 0 ? lin.symbols[0] : lin.symbols[1];
  const auto& neg = lin.symbols[0].first > 0 ? lin.symbols[1] : lin.symbols[0];
  out.atoms.push_back(DiffAtom{pos.second, neg.second, a.rel, rhs});
}

class Graph {
 public:
  explicit Graph(const DiffConjunction& c) : integer_(c.integer) {
    index_[""] = 0;
    names_.push_back("");
    for (const std::string& v : c.variables) Node(v);
    for (const DiffAtom& a : c.atoms) {
      Node(a.x);
      Node(a.y);
    }
    const size_t n = names_.size();
    dist_.assign(n, std::vector<std::optional<Weight>>(n));
    for (size_t i = 0; i < n; ++i) dist_[i][i] = Weight{0, 0};
    for (const DiffAtom& a : c.atoms) AddAtom(a);
  }

  // Floyd-Warshall. Returns false on a negative cycle.
  bool Close() {
    const size_t n = names_.size();
    for (size_t k = 0; k < n; ++k) {
      for (size_t i = 0; i < n; ++i) {
        if (!dist_[i][k]) continue;
        for (size_t j = 0; j < n; ++j) {
          if (!dist_[k][j]) continue;
          Weight w = Add(*dist_[i][k], *dist_[k][j]);
          if (!dist_[i][j] || Less(w, *dist_[i][j])) dist_[i][j] = std::move(w);
        }
      }
      for (size_t i = 0; i < n; ++i) {
        if (Less(*dist_[i][i], Weight{0, 0})) return false;
      }
    }
    return true;
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  const std::optional<Weight>& dist(size_t i, size_t j) const {
    return dist_[i][j];
  }

 private:
  size_t Node(const std::string& name) {
    auto [it, inserted] = index_.emplace(name, names_.size());
    if (inserted) names_.push_back(name);
    return it->second;
  }

  // Edge u -> v with weight w encodes value(v) - value(u) <= w.
  void AddEdge(size_t u, size_t v, Weight w) {
    if (integer_) {
      w = Weight{w.k > 0 ? Ceil(w.c) - 1 : Floor(w.c), 0};
    }
    if (!dist_[u][v] || Less(w, *dist_[u][v])) dist_[u][v] = std::move(w);
  }

  void AddAtom(const DiffAtom& a) {
    const size_t x = index_.at(a.x), y = index_.at(a.y);
    switch (a.rel) {
      case Rel::kLe:
        AddEdge(y, x, {a.c, 0});
        break;
      case Rel::kLt:
        AddEdge(y, x, {a.c, 1});
        break;
      case Rel::kGe:
        AddEdge(x, y, {-a.c, 0});
        break;
      case Rel::kGt:
        AddEdge(x, y, {-a.c, 1});
        break;
      case Rel::kEq:
        AddEdge(y, x, {a.c, 0});
        AddEdge(x, y, {-a.c, 0});
        break;
      default:
        throw std::logic_error("not a difference relation");
    }
  }

  bool integer_;
  std::map<std::string, size_t> index_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::optional<Weight>>> dist_;
};

}  // namespace

std::string BoxCoordName(const std::string& box, Coord coord) {
  switch (coord) {
    case Coord::kLLx:
      return box + "#LLx";
    case Coord::kLLy:
      return box + "#LLy";
    case Coord::kURx:
      return box + "#URx";
    case Coord::kURy:
      return box + "#URy";
    case Coord::kNone:
      break;
  }
  return box;
}

DiffConjunction LowerDifference(std::span<const Atom> atoms, bool integer) {
  DiffConjunction out;
  out.integer = integer;
  for (const Atom& a : atoms) LowerLinear(a, out);
  return out;
}

DiffConjunction LowerRcl(std::span<const Atom> atoms,
                         const std::set<std::string>& extra_boxes) {
  DiffConjunction out;
  std::set<std::string> boxes = extra_boxes;
  auto note_box = [&](const Operand& o) {
    if (o.is_eliteral()) boxes.insert(o.term().text());
  };
  for (const Atom& a : atoms) {
    note_box(a.lhs);
    if (a.sub) note_box(*a.sub);
    note_box(a.rhs);
    const bool box_equality = a.rel == Rel::kEq && !a.sub &&
                              a.lhs.coord == Coord::kNone &&
                              a.rhs.coord == Coord::kNone &&
                              !(a.lhs.is_constant() &&
                                a.lhs.term().constant().is_number()) &&
                              !(a.rhs.is_constant() &&
                                a.rhs.term().constant().is_number());
    if (box_equality) {
      for (Coord c : {Coord::kLLx, Coord::kLLy, Coord::kURx, Coord::kURy}) {
        LowerLinear(Atom::Binary(Rel::kEq, Operand(a.lhs.term(), c),
                                 Operand(a.rhs.term(), c)),
                    out);
      }
    } else {
      LowerLinear(a, out);
    }
  }
  for (const std::string& b : boxes) {
    for (auto [lo, hi] : {std::pair{Coord::kLLx, Coord::kURx},
                          std::pair{Coord::kLLy, Coord::kURy}}) {
      out.atoms.push_back(
          DiffAtom{BoxCoordName(b, lo), BoxCoordName(b, hi), Rel::kLt, 0});
      out.variables.insert(BoxCoordName(b, lo));
      out.variables.insert(BoxCoordName(b, hi));
    }
  }
  return out;
}

bool DiffAtomHolds(const DiffAtom& a,
                   const std::map<std::string, Rational>& values) {
  const Rational x = a.x.empty() ? Rational(0) : values.at(a.x);
  const Rational y = a.y.empty() ? Rational(0) : values.at(a.y);
  return Compare(x - y, a.rel, a.c);
}

bool DiffSatisfiable(const DiffConjunction& c) {
  if (c.contradiction) return false;
  Graph g(c);
  return g.Close();
}

std::optional<std::map<std::string, Rational>> DiffWitness(
    const DiffConjunction& c) {
  if (c.contradiction) return std::nullopt;
  Graph g(c);
  if (!g.Close()) return std::nullopt;
  const size_t n = g.size();
  // Potential from a virtual source joined to every node by weight 0.
  std::vector<Weight> potential(n, Weight{0, 0});
  for (size_t v = 0; v < n; ++v) {
    for (size_t u = 0; u < n; ++u) {
      const auto& d = g.dist(u, v);
      if (d && Less(*d, potential[v])) potential[v] = *d;
    }
  }
  Rational epsilon = 1;
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::map<std::string, Rational> values;
    const Rational zero = potential[0].c - potential[0].k * epsilon;
    for (size_t v = 1; v < n; ++v) {
      values[g.name(v)] = potential[v].c - potential[v].k * epsilon - zero;
    }
    bool ok = true;
    for (const DiffAtom& a : c.atoms) {
      if (!DiffAtomHolds(a, values)) {
        ok = false;
        break;
      }
    }
    if (ok) return values;
    epsilon /= 2;
  }
  throw std::logic_error("difference witness did not converge");
}

std::map<std::string, Rational> DiffForcedValues(const DiffConjunction& c) {
  std::map<std::string, Rational> out;
  if (c.contradiction) return out;
  Graph g(c);
  if (!g.Close()) return out;
  for (size_t v = 1; v < g.size(); ++v) {
    const auto& upper = g.dist(0, v);  // v <= upper
    const auto& lower = g.dist(v, 0);  // -v <= lower
    if (upper && lower && upper->k == 0 && lower->k == 0 &&
        upper->c == -lower->c) {
      out[g.name(v)] = upper->c;
    }
  }
  return out;
}

}  // namespace rdfi
