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

#ifndef RDFI_PARSER_H_
#define RDFI_PARSER_H_

#include <string_view>

#include "rdfi/certain.h"
#include "rdfi/database.h"
#include "rdfi/oracle.h"
#include "rdfi/query.h"

namespace rdfi {

// Syntax errors raise ParseError; well-formedness errors of the parsed
// content raise the Error codes of Database::Make.
//
//   #lang pcl
//   #global _e:R1 NTPP "x >= 6 && x <= 23 && y >= 8 && y <= 19" .
//   <fire1> <occurredIn> _e:R1 { _e:R1 PO R(0,0,4,4) } .
Database ParseDatabase(std::string_view text);

//   (select (?F) (filter (and (triple ?F <type> <Fire>) ...) (?R!s NTPP ...)))
//   (construct ((?F <type> <Fire>)) pattern)
Query ParseQuery(std::string_view text);

GraphPattern ParsePattern(std::string_view text);

// Lines "_e:name = c1 | c2 | ...".
DomainSpec ParseDomainSpec(std::string_view text);

// Unconditional ground triples "s p o .".
Graph ParseGraph(std::string_view text);

// Boolean combination of atoms; not checked against a language.
Formula ParseFormula(std::string_view text);

Term ParseTerm(std::string_view text);

// Inverses of the JSON serializers.
SelectAnswer ParseSelectAnswerJson(std::string_view text);
Database ParseConstructAnswerJson(std::string_view text);

}  // namespace rdfi

#endif  // RDFI_PARSER_H_
