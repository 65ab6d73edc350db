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

#ifndef RDFI_QUERY_H_
#define RDFI_QUERY_H_

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rdfi/algebra.h"
#include "rdfi/database.h"

namespace rdfi {

// A template triple may hold blank nodes in any term position.
struct TemplateTriple {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  friend bool operator==(const TemplateTriple&,
                         const TemplateTriple&) = default;
};

using Template = std::vector<TemplateTriple>;

struct SelectQuery {
  std::vector<Variable> projection;
  GraphPattern pattern;

  friend bool operator==(const SelectQuery&, const SelectQuery&) = default;
};

struct ConstructQuery {
  Template construct_template;
  GraphPattern pattern;

  friend bool operator==(const ConstructQuery&,
                         const ConstructQuery&) = default;
};

using Query = std::variant<SelectQuery, ConstructQuery>;

const GraphPattern& PatternOf(const Query& q);

enum class Fragment { kAuf, kWd, kOther };

std::string_view FragmentName(Fragment f);

// Safe filters, and for every OPT sub-pattern, variables of its right side
// that occur outside it also occur in its left side. Throws
// Error(kNotAfoFragment) if the pattern contains UNION.
bool CheckWellDesigned(const GraphPattern& pattern);

// AUF when only AND, UNION, FILTER and triple patterns occur; otherwise WD
// when union-free and well designed; otherwise OTHER.
Fragment FragmentOf(const GraphPattern& pattern);

std::set<std::string> TemplateBlanks(const Template& t);

struct SelectAnswer {
  MappingSet solutions;
  Formula global;
  Language language = Language::kEcl;

  friend bool operator==(const SelectAnswer&, const SelectAnswer&) = default;
};

SelectAnswer EvalSelect(const SelectQuery& q, const Database& db);

// One blank renaming per solution, in solution order. Fresh labels have the
// form "b_k" or "b_k_n" and avoid the blank nodes of the graph and of each
// other.
std::vector<std::map<std::string, std::string>> FreshBlankRenaming(
    const Template& construct_template, size_t num_solutions,
    const std::vector<ConditionalTriple>& graph);

// Instantiates the template; triples with unbound variables or outside
// (I u B) x I x T are dropped.
std::vector<Triple> ApplyTemplate(
    const Template& construct_template, const Binding& binding,
    const std::map<std::string, std::string>& renaming = {});

// The answer database: instantiated template triples under their solution's
// condition, with the global constraint carried over.
Database EvalConstruct(const ConstructQuery& q, const Database& db);

}  // namespace rdfi

#endif  // RDFI_QUERY_H_
