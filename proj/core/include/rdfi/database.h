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

#ifndef RDFI_DATABASE_H_
#define RDFI_DATABASE_H_

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "rdfi/formula.h"
#include "rdfi/language.h"
#include "rdfi/term.h"

namespace rdfi {

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  // "<s> <p> <o> ."
  std::string ToString() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b);
};

// Subject is an IRI or blank node, predicate an IRI. The object may be any
// term.
bool IsETriple(const Triple& t);

// A ground RDF graph.
using Graph = std::set<Triple>;

struct ConditionalTriple {
  Triple triple;
  Formula condition;

  friend bool operator==(const ConditionalTriple&,
                         const ConditionalTriple&) = default;
  friend std::strong_ordering operator<=>(const ConditionalTriple& a,
                                          const ConditionalTriple& b);
};

class Database {
 public:
  // Validates and deduplicates. Throws Error with kIllFormedTriple,
  // kLanguageMismatch or kUnknownDatatype.
  static Database Make(std::vector<ConditionalTriple> graph, Formula global,
                       Language language);

  // Sorted, duplicate-free.
  const std::vector<ConditionalTriple>& graph() const { return graph_; }
  const Formula& global() const { return global_; }
  Language language() const { return language_; }

  friend bool operator==(const Database&, const Database&) = default;

 private:
  Database(std::vector<ConditionalTriple> graph, Formula global,
           Language language)
      : graph_(std::move(graph)),
        global_(std::move(global)),
        language_(language) {}

  std::vector<ConditionalTriple> graph_;
  Formula global_;
  Language language_;
};

// E-literal names occurring in triples, conditions and the global constraint.
std::set<std::string> ELiteralsOf(const Database& db);

// Throws Error(kLanguageMismatch or kUnknownDatatype) unless every atom of f
// belongs to the language. Query variables are allowed as operands.
void ValidateFormula(const Formula& f, Language lang);
void ValidateAtom(const Atom& atom, Language lang);

// Throws unless t is an e-triple whose constants fit the language.
void ValidateTriple(const Triple& t, Language lang);

}  // namespace rdfi

#endif  // RDFI_DATABASE_H_
