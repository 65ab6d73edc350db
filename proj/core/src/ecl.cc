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

#include "rdfi/ecl.h"

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rdfi {
namespace {

class EclState {
 public:
  explicit EclState(std::span<const Atom> atoms) {
    for (const Atom& a : atoms) {
      if (a.rel != Rel::kEq && a.rel != Rel::kNeq) {
        throw std::logic_error("not an ECL atom");
      }
      const int x = Node(a.lhs), y = Node(a.rhs);
      if (a.rel == Rel::kEq) {
        Union(x, y);
      } else {
        neq_.emplace_back(x, y);
      }
    }
  }

  int Node(const Operand& o) {
    if (!o.is_term() || (!o.term().is_eliteral() && !o.term().is_constant())) {
      throw std::logic_error("ECL operand must be an e-literal or constant");
    }
    auto [it, inserted] = index_.emplace(o.term(), parent_.size());
    if (inserted) {
      parent_.push_back(it->second);
      terms_.push_back(o.term());
    }
    return it->second;
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void Union(int x, int y) { parent_[Find(x)] = Find(y); }

  // Constant of each class root; false on a clash.
  bool ClassConstants(std::map<int, Constant>& out) {
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (!terms_[i].is_constant()) continue;
      const int root = Find(static_cast<int>(i));
      auto [it, inserted] = out.emplace(root, terms_[i].constant());
      if (!inserted && !(it->second == terms_[i].constant())) return false;
    }
    return true;
  }

  bool Consistent(std::map<int, Constant>& constants) {
    if (!ClassConstants(constants)) return false;
    for (auto [x, y] : neq_) {
      if (Find(x) == Find(y)) return false;
    }
    return true;
  }

  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::map<Term, int> index_;
  std::vector<int> parent_;
  std::vector<Term> terms_;
  std::vector<std::pair<int, int>> neq_;
};

}  // namespace

bool EclSatisfiable(std::span<const Atom> atoms) {
  EclState state(atoms);
  std::map<int, Constant> constants;
  return state.Consistent(constants);
}

std::optional<Valuation> EclWitness(std::span<const Atom> atoms,
                                    const std::set<std::string>& lits) {
  EclState state(atoms);
  for (const std::string& l : lits) state.Node(Operand(Term::ELiteral(l)));
  std::map<int, Constant> constants;
  if (!state.Consistent(constants)) return std::nullopt;
  Rational fresh = 1;
  for (const auto& [root, c] : constants) {
    if (abs(c.number()) >= fresh) fresh = abs(c.number()) + 1;
  }
  Valuation out;
  std::map<int, Rational> assigned;
  const auto& terms = state.terms();
  for (size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].is_eliteral()) continue;
    const int root = state.Find(static_cast<int>(i));
    if (auto it = constants.find(root); it != constants.end()) {
      out[terms[i].text()] = it->second;
      continue;
    }
    auto [it, inserted] = assigned.emplace(root, fresh);
    if (inserted) fresh += 1;
    out[terms[i].text()] = Constant(it->second);
  }
  return out;
}

Valuation EclForcedValues(std::span<const Atom> atoms) {
  EclState state(atoms);
  std::map<int, Constant> constants;
  state.ClassConstants(constants);
  Valuation out;
  const auto& terms = state.terms();
  for (size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].is_eliteral()) continue;
    auto it = constants.find(state.Find(static_cast<int>(i)));
    if (it != constants.end()) out[terms[i].text()] = it->second;
  }
  return out;
}

}  // namespace rdfi
