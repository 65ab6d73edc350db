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

#include "rdfi/parser.h"

#include <stdexcept>

#include "json.hpp"
#include "rdfi/errors.h"
#include "rdfi/lexer.h"

namespace rdfi {
namespace {

struct RelSpelling {
  std::string_view text;
  Rel rel;
  bool converse;
};

constexpr RelSpelling kRelations[] = {
    {"=", Rel::kEq, false},     {"!=", Rel::kNeq, false},
    {"<", Rel::kLt, false},     {"<=", Rel::kLe, false},
    {">", Rel::kGt, false},     {">=", Rel::kGe, false},
    {"EQ", Rel::kEq, false},    {"DC", Rel::kDC, false},
    {"EC", Rel::kEC, false},    {"PO", Rel::kPO, false},
    {"TPP", Rel::kTPP, false},  {"NTPP", Rel::kNTPP, false},
    {"TPPi", Rel::kTPP, true},  {"NTPPi", Rel::kNTPP, true},
};

constexpr std::pair<std::string_view, Coord> kCoords[] = {
    {"LLx", Coord::kLLx},
    {"LLy", Coord::kLLy},
    {"URx", Coord::kURx},
    {"URy", Coord::kURy},
};

bool LooksLikeRegion(const std::string& s) {
  return s.find_first_of("<>=") != std::string::npos;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Tokenize(text)) {}

  const Token& Peek(size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool AtEnd() const { return Peek().kind == TokenKind::kEnd; }

  const Token& Take() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  bool IsPunct(std::string_view p, size_t ahead = 0) const {
    return Peek(ahead).kind == TokenKind::kPunct && Peek(ahead).text == p;
  }
  bool IsIdent(std::string_view id, size_t ahead = 0) const {
    return Peek(ahead).kind == TokenKind::kIdent && Peek(ahead).text == id;
  }

  bool Accept(std::string_view p) {
    if (!IsPunct(p)) return false;
    Take();
    return true;
  }

  void Expect(std::string_view p) {
    if (!Accept(p)) Fail("expected '" + std::string(p) + "'");
  }

  std::string ExpectIdent() {
    if (Peek().kind != TokenKind::kIdent) Fail("expected a keyword");
    return Take().text;
  }

  void ExpectEnd() {
    if (!AtEnd()) Fail("unexpected trailing input");
  }

  [[noreturn]] void Fail(const std::string& msg) const {
    const Token& t = Peek();
    std::string found = t.kind == TokenKind::kEnd ? "end of input" : t.text;
    throw ParseError(t.line, t.column, msg + " near '" + found + "'");
  }

  // Numbers --------------------------------------------------------------

  Rational Number() {
    const bool negative = Accept("-");
    if (Peek().kind != TokenKind::kNumber) Fail("expected a number");
    std::optional<Rational> r = ParseRational(Take().text);
    if (!r) Fail("malformed number");
    return negative ? Rational(-*r) : *r;
  }

  bool AtNumber() const {
    return Peek().kind == TokenKind::kNumber ||
           (IsPunct("-") && Peek(1).kind == TokenKind::kNumber);
  }

  // R(x1, y1, x2, y2): the box with lower-left (x1, y1) and upper-right
  // (x2, y2).
  Polygon BoxShorthand() {
    Take();
    Expect("(");
    Rational v[4];
    for (int i = 0; i < 4; ++i) {
      if (i > 0) Expect(",");
      v[i] = Number();
    }
    Expect(")");
    if (v[0] >= v[2] || v[1] >= v[3]) {
      throw Error(ErrorCode::kDegeneratePolygon, "box without area");
    }
    return Polygon::Box(v[0], v[1], v[2], v[3]);
  }

  Polygon Region(const Token& t) {
    try {
      return Polygon::Parse(t.text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(t.line, t.column, std::string("bad region: ") + e.what());
    }
  }

  // Terms ----------------------------------------------------------------

  bool AtTerm() const {
    switch (Peek().kind) {
      case TokenKind::kIri:
      case TokenKind::kBlank:
      case TokenKind::kELiteral:
      case TokenKind::kString:
      case TokenKind::kNumber:
        return true;
      case TokenKind::kIdent:
        return IsIdent("R") && IsPunct("(", 1);
      case TokenKind::kPunct:
        return AtNumber();
      default:
        return false;
    }
  }

  Term ParseTermHere() {
    if (AtNumber()) return Term::Const(Constant(Number()));
    if (IsIdent("R") && IsPunct("(", 1)) return Term::Const(BoxShorthand());
    const Token& t = Take();
    switch (t.kind) {
      case TokenKind::kIri:
        return Term::Iri(t.text);
      case TokenKind::kBlank:
        return Term::Blank(t.text);
      case TokenKind::kELiteral:
        return Term::ELiteral(t.text);
      case TokenKind::kString: {
        if (Accept("^^")) {
          if (Peek().kind != TokenKind::kIri) Fail("expected a datatype IRI");
          return Term::PlainLiteral(t.text, Take().text);
        }
        if (LooksLikeRegion(t.text)) return Term::Const(Region(t));
        return Term::PlainLiteral(t.text);
      }
      default:
        --pos_;
        Fail("expected a term");
    }
  }

  Constant ParseConstantHere() {
    const Token& start = Peek();
    Term t = ParseTermHere();
    if (!t.is_constant()) {
      throw ParseError(start.line, start.column, "expected a constant");
    }
    return t.constant();
  }

  PatternTerm ParsePatternTerm() {
    if (Peek().kind == TokenKind::kVariable) return ParseVariable();
    return ParseTermHere();
  }

  Variable ParseVariable() {
    if (Peek().kind != TokenKind::kVariable) Fail("expected a variable");
    const Token& t = Take();
    return Variable{t.text, t.special};
  }

  // Formulas -------------------------------------------------------------

  Operand ParseOperand() {
    for (const auto& [name, coord] : kCoords) {
      if (IsIdent(name) && IsPunct("(", 1)) {
        Take();
        Take();
        Operand inner = ParseOperand();
        Expect(")");
        if (inner.coord != Coord::kNone) Fail("nested coordinate");
        return inner.WithCoord(coord);
      }
    }
    if (Peek().kind == TokenKind::kVariable) return Operand(ParseVariable());
    if (!AtTerm()) Fail("expected an operand");
    return Operand(ParseTermHere());
  }

  Formula ParseAtom() {
    Operand lhs = ParseOperand();
    std::optional<Operand> sub;
    if (Accept("-")) sub = ParseOperand();
    const Token& t = Peek();
    for (const RelSpelling& r : kRelations) {
      const bool match = t.text == r.text &&
                         (t.kind == TokenKind::kPunct ||
                          (t.kind == TokenKind::kIdent && r.text[0] >= 'A'));
      if (!match) continue;
      Take();
      Operand rhs = ParseOperand();
      if (r.converse) {
        if (sub) Fail("converse relation on a difference");
        std::swap(lhs, rhs);
      }
      return Formula::Of(Atom{r.rel, std::move(lhs), std::move(sub),
                              std::move(rhs)});
    }
    Fail("expected a relation");
  }

  Formula ParseUnary() {
    if (Accept("!")) return Formula::Not(ParseUnary());
    if (Accept("(")) {
      Formula f = ParseOr();
      Expect(")");
      return f;
    }
    if (IsIdent("true")) {
      Take();
      return Formula::True();
    }
    if (IsIdent("false")) {
      Take();
      return Formula::False();
    }
    return ParseAtom();
  }

  Formula ParseAnd() {
    std::vector<Formula> parts{ParseUnary()};
    while (Accept("&&")) parts.push_back(ParseUnary());
    return parts.size() == 1 ? parts[0] : Formula::And(std::move(parts));
  }

  Formula ParseOr() {
    std::vector<Formula> parts{ParseAnd()};
    while (Accept("||")) parts.push_back(ParseAnd());
    return parts.size() == 1 ? parts[0] : Formula::Or(std::move(parts));
  }

  // Documents ------------------------------------------------------------

  Database ParseDatabaseDoc() {
    if (Peek().kind != TokenKind::kDirective || Peek().text != "lang") {
      Fail("a database starts with #lang");
    }
    Take();
    const Token& name = Peek();
    const std::optional<Language> lang = ParseLanguage(ExpectIdent());
    if (!lang) throw ParseError(name.line, name.column, "unknown language");
    std::vector<Formula> globals;
    std::vector<ConditionalTriple> graph;
    while (!AtEnd()) {
      if (Peek().kind == TokenKind::kDirective) {
        if (Peek().text != "global") Fail("one #lang per document");
        Take();
        globals.push_back(ParseOr());
        Expect(".");
        continue;
      }
      Triple t = ParseTripleTerms();
      Formula condition = Formula::True();
      if (Accept("{")) {
        condition = ParseOr();
        Expect("}");
      }
      Expect(".");
      graph.push_back({std::move(t), std::move(condition)});
    }
    return Database::Make(std::move(graph), Formula::And(std::move(globals)),
                          *lang);
  }

  Triple ParseTripleTerms() {
    Triple t;
    t.subject = ParseTermHere();
    t.predicate = ParseTermHere();
    t.object = ParseTermHere();
    return t;
  }

  Graph ParseGraphDoc() {
    Graph out;
    while (!AtEnd()) {
      const Token& start = Peek();
      Triple t = ParseTripleTerms();
      Expect(".");
      if (!IsETriple(t)) {
        throw ParseError(start.line, start.column,
                         "not an RDF triple: " + t.ToString());
      }
      out.insert(std::move(t));
    }
    return out;
  }

  GraphPattern ParsePatternHere() {
    Expect("(");
    const std::string op = ExpectIdent();
    GraphPattern out = [&] {
      if (op == "triple") {
        TriplePattern tp;
        tp.subject = ParsePatternTerm();
        tp.predicate = ParsePatternTerm();
        tp.object = ParsePatternTerm();
        return GraphPattern::Triple(std::move(tp));
      }
      if (op == "and" || op == "union" || op == "opt") {
        GraphPattern l = ParsePatternHere();
        GraphPattern r = ParsePatternHere();
        if (op == "and") return GraphPattern::And(std::move(l), std::move(r));
        if (op == "union") {
          return GraphPattern::Union(std::move(l), std::move(r));
        }
        return GraphPattern::Opt(std::move(l), std::move(r));
      }
      if (op == "filter") {
        GraphPattern inner = ParsePatternHere();
        return GraphPattern::Filter(std::move(inner), ParseOr());
      }
      Fail("unknown pattern operator '" + op + "'");
    }();
    if (!IsPunct(")")) Fail("wrong number of arguments to '" + op + "'");
    Take();
    return out;
  }

  Query ParseQueryDoc() {
    Expect("(");
    const std::string form = ExpectIdent();
    auto body = [&]() -> Query {
      if (form == "select") {
        std::vector<Variable> projection;
        Expect("(");
        while (!Accept(")")) projection.push_back(ParseVariable());
        return SelectQuery{std::move(projection), ParsePatternHere()};
      }
      if (form == "construct") {
        Template construct_template;
        Expect("(");
        while (!Accept(")")) {
          Expect("(");
          TemplateTriple tt;
          tt.subject = ParsePatternTerm();
          tt.predicate = ParsePatternTerm();
          tt.object = ParsePatternTerm();
          Expect(")");
          construct_template.push_back(std::move(tt));
        }
        return ConstructQuery{std::move(construct_template),
                              ParsePatternHere()};
      }
      Fail("expected select or construct");
    };
    Query out = body();
    Expect(")");
    ExpectEnd();
    return out;
  }

  DomainSpec ParseDomainDoc() {
    DomainSpec out;
    while (!AtEnd()) {
      if (Peek().kind != TokenKind::kELiteral) Fail("expected an e-literal");
      const Token& lit = Take();
      Expect("=");
      std::vector<Constant>& values = out[lit.text];
      if (!values.empty()) {
        throw ParseError(lit.line, lit.column, "duplicate domain entry");
      }
      do {
        values.push_back(ParseConstantHere());
      } while (Accept("|"));
    }
    return out;
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

// JSON fields hold text in the formats above.
const std::string& JsonString(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw Error(ErrorCode::kParse, std::string("missing string field ") + key);
  }
  return j.at(key).get_ref<const std::string&>();
}

nlohmann::json ParseJson(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

Language JsonLanguage(const nlohmann::json& j) {
  if (!j.contains("language")) return Language::kEcl;
  std::optional<Language> lang = ParseLanguage(JsonString(j, "language"));
  if (!lang) throw Error(ErrorCode::kParse, "unknown language");
  return *lang;
}

Formula JsonFormula(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return Formula::True();
  return ParseFormula(JsonString(j, key));
}

Variable ParseVariableText(const std::string& text) {
  Parser p(text);
  Variable v = p.ParseVariable();
  p.ExpectEnd();
  return v;
}

}  // namespace

Database ParseDatabase(std::string_view text) {
  return Parser(text).ParseDatabaseDoc();
}

Query ParseQuery(std::string_view text) { return Parser(text).ParseQueryDoc(); }

GraphPattern ParsePattern(std::string_view text) {
  Parser p(text);
  GraphPattern out = p.ParsePatternHere();
  p.ExpectEnd();
  return out;
}

DomainSpec ParseDomainSpec(std::string_view text) {
  return Parser(text).ParseDomainDoc();
}

Graph ParseGraph(std::string_view text) {
  return Parser(text).ParseGraphDoc();
}

Formula ParseFormula(std::string_view text) {
  Parser p(text);
  Formula out = p.ParseOr();
  p.ExpectEnd();
  return out;
}

Term ParseTerm(std::string_view text) {
  Parser p(text);
  Term out = p.ParseTermHere();
  p.ExpectEnd();
  return out;
}

SelectAnswer ParseSelectAnswerJson(std::string_view text) {
  const nlohmann::json j = ParseJson(text);
  SelectAnswer out{{}, JsonFormula(j, "global"), JsonLanguage(j)};
  if (!j.contains("solutions") || !j.at("solutions").is_array()) {
    throw Error(ErrorCode::kParse, "missing solutions array");
  }
  for (const nlohmann::json& s : j.at("solutions")) {
    ConditionalMapping m{{}, JsonFormula(s, "condition")};
    if (s.contains("bindings")) {
      for (const auto& [var, term] : s.at("bindings").items()) {
        if (!term.is_string()) throw Error(ErrorCode::kParse, "bad binding");
        m.binding.emplace(ParseVariableText(var),
                          ParseTerm(term.get<std::string>()));
      }
    }
    AddMapping(out.solutions, std::move(m));
  }
  return out;
}

Database ParseConstructAnswerJson(std::string_view text) {
  const nlohmann::json j = ParseJson(text);
  std::vector<ConditionalTriple> graph;
  if (j.contains("triples")) {
    for (const nlohmann::json& t : j.at("triples")) {
      graph.push_back({Triple{ParseTerm(JsonString(t, "subject")),
                              ParseTerm(JsonString(t, "predicate")),
                              ParseTerm(JsonString(t, "object"))},
                       JsonFormula(t, "condition")});
    }
  }
  return Database::Make(std::move(graph), JsonFormula(j, "global"),
                        JsonLanguage(j));
}

}  // namespace rdfi
