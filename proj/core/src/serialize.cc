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

#include "rdfi/serialize.h"

#include <algorithm>

#include "json.hpp"

namespace rdfi {
namespace {

// Queries carry no language; any spelling of EQ parses back to the same
// relation, so pick the one that reads naturally.
Language SpellingFor(const Formula& f) {
  std::vector<Atom> atoms;
  CollectAtoms(f, atoms);
  for (const Atom& a : atoms) {
    if (IsTopological(a.rel)) return Language::kPcl;
  }
  return Language::kDePcl;
}

std::string FormulaText(const Formula& f) {
  return FormulaToString(f, SpellingFor(f));
}

std::vector<std::pair<std::string, const ConditionalMapping*>> SortedSolutions(
    const SelectAnswer& answer) {
  std::vector<std::pair<std::string, const ConditionalMapping*>> out;
  for (const ConditionalMapping& m : answer.solutions) {
    out.emplace_back(BindingToString(m.binding) + "\x1f" +
                         FormulaToString(m.condition, answer.language),
                     &m);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string SortedLines(std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

}  // namespace

std::string SerializeDatabase(const Database& db) {
  const Language lang = db.language();
  std::string out = "#lang " + std::string(LanguageName(lang)) + "\n";
  if (!db.global().is_true()) {
    out += "#global " + FormulaToString(db.global(), lang) + " .\n";
  }
  for (const ConditionalTriple& ct : db.graph()) {
    const Triple& t = ct.triple;
    out += t.subject.ToString() + " " + t.predicate.ToString() + " " +
           t.object.ToString();
    if (!ct.condition.is_true()) {
      out += " { " + FormulaToString(ct.condition, lang) + " }";
    }
    out += " .\n";
  }
  return out;
}

std::string SerializePattern(const GraphPattern& p) {
  switch (p.kind()) {
    case GraphPattern::Kind::kTriple: {
      const TriplePattern& t = p.triple();
      return "(triple " + PatternTermToString(t.subject) + " " +
             PatternTermToString(t.predicate) + " " +
             PatternTermToString(t.object) + ")";
    }
    case GraphPattern::Kind::kAnd:
      return "(and " + SerializePattern(p.left()) + " " +
             SerializePattern(p.right()) + ")";
    case GraphPattern::Kind::kUnion:
      return "(union " + SerializePattern(p.left()) + " " +
             SerializePattern(p.right()) + ")";
    case GraphPattern::Kind::kOpt:
      return "(opt " + SerializePattern(p.left()) + " " +
             SerializePattern(p.right()) + ")";
    case GraphPattern::Kind::kFilter:
      return "(filter " + SerializePattern(p.left()) + " (" +
             FormulaText(p.filter()) + "))";
  }
  return "";
}

std::string SerializeQuery(const Query& q) {
  if (const auto* s = std::get_if<SelectQuery>(&q)) {
    std::string vars;
    for (const Variable& v : s->projection) {
      if (!vars.empty()) vars += " ";
      vars += v.ToString();
    }
    return "(select (" + vars + ") " + SerializePattern(s->pattern) + ")";
  }
  const auto& c = std::get<ConstructQuery>(q);
  std::string tmpl;
  for (const TemplateTriple& t : c.construct_template) {
    if (!tmpl.empty()) tmpl += " ";
    tmpl += "(" + PatternTermToString(t.subject) + " " +
            PatternTermToString(t.predicate) + " " +
            PatternTermToString(t.object) + ")";
  }
  return "(construct (" + tmpl + ") " + SerializePattern(c.pattern) + ")";
}

std::string SerializeDomainSpec(const DomainSpec& dom) {
  std::string out;
  for (const auto& [lit, values] : dom) {
    out += "_e:" + lit + " =";
    for (size_t i = 0; i < values.size(); ++i) {
      out += (i == 0 ? " " : " | ") + values[i].ToString();
    }
    out += "\n";
  }
  return out;
}

std::string BindingToString(const Binding& b) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, term] : b) {
    if (!first) out += ", ";
    first = false;
    out += var.ToString() + " -> " + term.ToString();
  }
  return out + "}";
}

std::string SerializeSelectText(const SelectAnswer& answer) {
  std::string out;
  if (!answer.global.is_true()) {
    out += "# global: " + FormulaToString(answer.global, answer.language) +
           "\n";
  }
  for (const auto& [key, m] : SortedSolutions(answer)) {
    out += BindingToString(m->binding);
    if (!m->condition.is_true()) {
      out += " | " + FormulaToString(m->condition, answer.language);
    }
    out += "\n";
  }
  return out;
}

std::string SerializeSelectJson(const SelectAnswer& answer) {
  nlohmann::ordered_json j;
  j["language"] = LanguageName(answer.language);
  j["global"] = FormulaToString(answer.global, answer.language);
  j["solutions"] = nlohmann::ordered_json::array();
  for (const auto& [key, m] : SortedSolutions(answer)) {
    nlohmann::ordered_json s;
    s["bindings"] = nlohmann::ordered_json::object();
    for (const auto& [var, term] : m->binding) {
      s["bindings"][var.ToString()] = term.ToString();
    }
    s["condition"] = FormulaToString(m->condition, answer.language);
    j["solutions"].push_back(std::move(s));
  }
  return j.dump(2) + "\n";
}

std::string SerializeConstructJson(const Database& answer) {
  nlohmann::ordered_json j;
  j["language"] = LanguageName(answer.language());
  j["global"] = FormulaToString(answer.global(), answer.language());
  j["triples"] = nlohmann::ordered_json::array();
  for (const ConditionalTriple& ct : answer.graph()) {
    nlohmann::ordered_json t;
    t["subject"] = ct.triple.subject.ToString();
    t["predicate"] = ct.triple.predicate.ToString();
    t["object"] = ct.triple.object.ToString();
    t["condition"] = FormulaToString(ct.condition, answer.language());
    j["triples"].push_back(std::move(t));
  }
  return j.dump(2) + "\n";
}

std::string SerializeTriples(const Graph& graph) {
  std::vector<std::string> lines;
  for (const Triple& t : graph) lines.push_back(t.ToString());
  return SortedLines(std::move(lines));
}

std::string SerializeBindings(const std::set<Binding>& bindings) {
  std::vector<std::string> lines;
  for (const Binding& b : bindings) lines.push_back(BindingToString(b));
  return SortedLines(std::move(lines));
}

std::string SerializeWorlds(const std::vector<World>& worlds) {
  std::string out;
  for (size_t i = 0; i < worlds.size(); ++i) {
    out += "# world " + std::to_string(i + 1) + "\n";
    out += SerializeTriples(worlds[i]);
  }
  return out;
}

}  // namespace rdfi
