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

#include "rdfi/pcl.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rdfi/errors.h"

namespace rdfi {
namespace {

Rcc8Set RelationSet(Rel r) {
  switch (r) {
    case Rel::kEq:
      return Bit(Rcc8::kEQ);
    case Rel::kDC:
      return Bit(Rcc8::kDC);
    case Rel::kEC:
      return Bit(Rcc8::kEC);
    case Rel::kPO:
      return Bit(Rcc8::kPO);
    case Rel::kTPP:
      return Bit(Rcc8::kTPP);
    case Rel::kNTPP:
      return Bit(Rcc8::kNTPP);
    default:
      throw std::logic_error("not a topological relation");
  }
}

// Budget on relation evaluations per witness search.
constexpr long kWitnessBudget = 3'000'000;

class WitnessSearch {
 public:
  WitnessSearch(const PclNetwork& net, const Rcc8Network& scenario,
                const std::vector<Polygon>& candidates)
      : net_(net), scenario_(scenario), candidates_(candidates) {
    const int n = scenario.size();
    regions_.resize(n);
    assigned_.assign(n, false);
    for (size_t i = 0; i < net.landmarks.size(); ++i) {
      regions_[net.landmark_node(i)] = net.landmarks[i];
      assigned_[net.landmark_node(i)] = true;
    }
  }

  bool Run() { return Assign(0); }
  bool exhausted() const { return budget_ <= 0; }
  const Polygon& region(int node) const { return *regions_[node]; }

 private:
  bool Fits(int v, const Polygon& p) {
    for (int u = 0; u < scenario_.size(); ++u) {
      if (u == v || !assigned_[u]) continue;
      --budget_;
      if (Bit(Rcc8Relation(p, *regions_[u])) != scenario_.edge(v, u)) {
        return false;
      }
    }
    return true;
  }

  bool Assign(size_t v) {
    if (v == net_.variables.size()) return true;
    if (budget_ <= 0) return false;
    // Equal to an assigned node: reuse its region.
    for (int u = 0; u < scenario_.size(); ++u) {
      if (assigned_[u] && scenario_.edge(v, u) == Bit(Rcc8::kEQ)) {
        const Polygon p = *regions_[u];
        if (!Fits(v, p)) return false;
        regions_[v] = p;
        assigned_[v] = true;
        if (Assign(v + 1)) return true;
        assigned_[v] = false;
        return false;
      }
    }
    for (const Polygon& p : candidates_) {
      if (budget_ <= 0) return false;
      if (!Fits(v, p)) continue;
      regions_[v] = p;
      assigned_[v] = true;
      if (Assign(v + 1)) return true;
      assigned_[v] = false;
    }
    return false;
  }

  const PclNetwork& net_;
  const Rcc8Network& scenario_;
  const std::vector<Polygon>& candidates_;
  std::vector<std::optional<Polygon>> regions_;
  std::vector<bool> assigned_;
  long budget_ = kWitnessBudget;
};

std::vector<Rational> Refine(const std::vector<Rational>& coords) {
  std::vector<Rational> out;
  for (size_t i = 0; i < coords.size(); ++i) {
    out.push_back(coords[i]);
    if (i + 1 < coords.size()) out.push_back((coords[i] + coords[i + 1]) / 2);
  }
  return out;
}

std::vector<Polygon> GridRectangles(const std::vector<Rational>& xs,
                                    const std::vector<Rational>& ys) {
  std::vector<Polygon> out;
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i + 1; j < xs.size(); ++j) {
      for (size_t k = 0; k < ys.size(); ++k) {
        for (size_t l = k + 1; l < ys.size(); ++l) {
          out.push_back(Polygon::Box(xs[i], ys[k], xs[j], ys[l]));
        }
      }
    }
  }
  return out;
}

}  // namespace

PclNetwork BuildPclNetwork(std::span<const Atom> atoms,
                           const std::set<std::string>& extra_variables) {
  PclNetwork net;
  std::map<std::string, int> var_index;
  std::map<Polygon, int> landmark_index;
  auto note = [&](const Operand& o) {
    if (!o.is_term()) throw std::logic_error("unbound variable in constraint");
    if (o.term().is_eliteral()) {
      var_index.emplace(o.term().text(), 0);
    } else if (o.term().is_constant() && o.term().constant().is_region()) {
      landmark_index.emplace(o.term().constant().region(), 0);
    } else {
      throw std::logic_error("topological operand must be a region");
    }
  };
  for (const std::string& v : extra_variables) var_index.emplace(v, 0);
  for (const Atom& a : atoms) {
    note(a.lhs);
    note(a.rhs);
  }
  for (auto& [name, idx] : var_index) {
    idx = static_cast<int>(net.variables.size());
    net.variables.push_back(name);
  }
  for (auto& [poly, idx] : landmark_index) {
    idx = static_cast<int>(net.variables.size() + net.landmarks.size());
    net.landmarks.push_back(poly);
  }
  const int n = static_cast<int>(net.variables.size() + net.landmarks.size());
  net.network = Rcc8Network(n);
  for (size_t i = 0; i < net.landmarks.size(); ++i) {
    for (size_t j = i + 1; j < net.landmarks.size(); ++j) {
      net.network.Set(net.landmark_node(i), net.landmark_node(j),
                      Bit(Rcc8Relation(net.landmarks[i], net.landmarks[j])));
    }
  }
  auto node = [&](const Operand& o) {
    if (o.term().is_eliteral()) return var_index.at(o.term().text());
    return landmark_index.at(o.term().constant().region());
  };
  for (const Atom& a : atoms) {
    net.network.Constrain(node(a.lhs), node(a.rhs), RelationSet(a.rel));
  }
  return net;
}

bool ForEachConsistentScenario(
    const Rcc8Network& network,
    const std::function<bool(const Rcc8Network&)>& visit) {
  Rcc8Network current = network;
  if (!PathConsistency(current)) return false;
  int best_i = -1, best_j = -1, best_count = 9;
  for (int i = 0; i < current.size(); ++i) {
    for (int j = i + 1; j < current.size(); ++j) {
      const int count = std::popcount(current.edge(i, j));
      if (count > 1 && count < best_count) {
        best_i = i;
        best_j = j;
        best_count = count;
      }
    }
  }
  if (best_i < 0) return visit(current);
  const Rcc8Set options = current.edge(best_i, best_j);
  for (int r = 0; r < kNumRcc8; ++r) {
    if (!(options & (1 << r))) continue;
    Rcc8Network branch = current;
    branch.Set(best_i, best_j, Rcc8Set(1 << r));
    if (ForEachConsistentScenario(branch, visit)) return true;
  }
  return false;
}

bool PclSatisfiable(std::span<const Atom> atoms) {
  PclNetwork net = BuildPclNetwork(atoms);
  return ForEachConsistentScenario(net.network,
                                   [](const Rcc8Network&) { return true; });
}

std::optional<Valuation> PclWitness(std::span<const Atom> atoms,
                                    const std::set<std::string>& lits) {
  PclNetwork net = BuildPclNetwork(atoms, lits);
  // Grid coordinates from the landmarks, with a margin on each side.
  std::set<Rational> xset, yset;
  for (const Polygon& p : net.landmarks) {
    for (const Point& v : p.vertices()) {
      xset.insert(v.x);
      yset.insert(v.y);
    }
  }
  if (xset.empty()) {
    const int extent = std::min<int>(2 * net.variables.size() + 2, 8);
    for (int i = 0; i < extent; ++i) {
      xset.insert(Rational(i));
      yset.insert(Rational(i));
    }
  } else {
    xset.insert(*xset.begin() - 1);
    xset.insert(*xset.rbegin() + 1);
    yset.insert(*yset.begin() - 1);
    yset.insert(*yset.rbegin() + 1);
  }
  std::vector<Rational> xs(xset.begin(), xset.end());
  std::vector<Rational> ys(yset.begin(), yset.end());

  bool consistent = false;
  bool exhausted = false;
  std::optional<Valuation> found;
  constexpr int kRefinements = 3;
  constexpr size_t kMaxCandidates = 60000;
  std::vector<std::vector<Polygon>> grids;
  for (int round = 0; round <= kRefinements; ++round) {
    const size_t nx = xs.size(), ny = ys.size();
    if (round > 0 && nx * (nx - 1) / 2 * (ny * (ny - 1) / 2) > kMaxCandidates) {
      break;
    }
    std::vector<Polygon> candidates = net.landmarks;
    for (Polygon& p : GridRectangles(xs, ys)) candidates.push_back(std::move(p));
    grids.push_back(std::move(candidates));
    xs = Refine(xs);
    ys = Refine(ys);
  }
  int scenarios = 0;
  ForEachConsistentScenario(net.network, [&](const Rcc8Network& scenario) {
    consistent = true;
    for (const auto& candidates : grids) {
      WitnessSearch search(net, scenario, candidates);
      if (search.Run()) {
        Valuation v;
        for (size_t i = 0; i < net.variables.size(); ++i) {
          v[net.variables[i]] = Constant(search.region(static_cast<int>(i)));
        }
        found = std::move(v);
        return true;
      }
      if (search.exhausted()) exhausted = true;
    }
    return ++scenarios >= 16;
  });
  if (found) return found;
  if (!consistent) return std::nullopt;
  throw Error(ErrorCode::kNoWitness,
              exhausted ? "rectangle search budget exhausted"
                        : "no rectangle model found on the refined grid");
}

Valuation PclForcedValues(std::span<const Atom> atoms) {
  PclNetwork net = BuildPclNetwork(atoms);
  Valuation out;
  if (!PathConsistency(net.network)) return out;
  for (size_t v = 0; v < net.variables.size(); ++v) {
    for (size_t l = 0; l < net.landmarks.size(); ++l) {
      if (net.network.edge(static_cast<int>(v), net.landmark_node(l)) ==
          Bit(Rcc8::kEQ)) {
        out[net.variables[v]] = Constant(net.landmarks[l]);
      }
    }
  }
  return out;
}

}  // namespace rdfi
