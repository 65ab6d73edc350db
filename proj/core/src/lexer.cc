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

#include "rdfi/lexer.h"

#include <cctype>

#include "rdfi/errors.h"

namespace rdfi {
namespace {

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIriChar(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '<' &&
         c != '"' && c != '{' && c != '}' && c != '|' && c != '^' &&
         c != '`' && c != '\\';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipSpaceAndComments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      Next(t);
      out.push_back(std::move(t));
    }
  }

 private:
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_++] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  bool StartsWith(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  [[noreturn]] void Fail(const std::string& msg) const {
    throw ParseError(line_, column_, msg);
  }

  bool AtDirective(std::string_view name) const {
    return StartsWith(name) && !IsNameChar(Peek(name.size()));
  }

  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(Peek()))) {
        Advance();
      } else if (Peek() == '#' && !AtDirective("#lang") &&
                 !AtDirective("#global")) {
        while (pos_ < text_.size() && Peek() != '\n') Advance();
      } else {
        return;
      }
    }
  }

  std::string Name() {
    std::string out;
    while (IsNameChar(Peek())) {
      out += Peek();
      Advance();
    }
    return out;
  }

  void Punct(Token& t, std::string text, size_t width) {
    t.kind = TokenKind::kPunct;
    t.text = std::move(text);
    Advance(width);
  }

  // '<' opens an IRI when a '>' follows before any whitespace.
  bool IriAhead() const {
    size_t i = pos_ + 1;
    while (i < text_.size() && IsIriChar(text_[i]) && text_[i] != '>') ++i;
    return i > pos_ + 1 && i < text_.size() && text_[i] == '>';
  }

  void Next(Token& t) {
    const char c = Peek();
    if (c == '<' && IriAhead()) {
      Advance();
      t.kind = TokenKind::kIri;
      while (Peek() != '>') {
        t.text += Peek();
        Advance();
      }
      Advance();
      return;
    }
    if (StartsWith("_:") || StartsWith("_e:")) {
      const bool elit = Peek(1) == 'e';
      Advance(elit ? 3 : 2);
      t.kind = elit ? TokenKind::kELiteral : TokenKind::kBlank;
      t.text = Name();
      if (t.text.empty()) Fail("expected a label");
      return;
    }
    if (c == '?') {
      Advance();
      t.kind = TokenKind::kVariable;
      t.text = Name();
      if (t.text.empty()) Fail("expected a variable name");
      if (Peek() == '!' && Peek(1) == 's' && !IsNameChar(Peek(2))) {
        t.special = true;
        Advance(2);
      }
      return;
    }
    if (c == '#') {
      Advance();
      t.kind = TokenKind::kDirective;
      t.text = Name();
      return;
    }
    if (c == '"') {
      Advance();
      t.kind = TokenKind::kString;
      while (Peek() != '"') {
        if (pos_ >= text_.size()) Fail("unterminated string");
        if (Peek() == '\\') {
          Advance();
          if (pos_ >= text_.size()) Fail("unterminated string");
        }
        t.text += Peek();
        Advance();
      }
      Advance();
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = TokenKind::kNumber;
      auto digits = [&] {
        while (std::isdigit(static_cast<unsigned char>(Peek()))) {
          t.text += Peek();
          Advance();
        }
      };
      digits();
      if ((Peek() == '/' || Peek() == '.') &&
          std::isdigit(static_cast<unsigned char>(Peek(1)))) {
        t.text += Peek();
        Advance();
        digits();
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = TokenKind::kIdent;
      t.text = Name();
      return;
    }
    // Unicode connectives and comparisons.
    static constexpr std::pair<std::string_view, std::string_view> kUnicode[] =
        {{"∧", "&&"}, {"∨", "||"}, {"¬", "!"},
         {"≤", "<="}, {"≥", ">="}, {"≠", "!="}};
    for (const auto& [symbol, ascii] : kUnicode) {
      if (StartsWith(symbol)) {
        t.kind = TokenKind::kPunct;
        t.text = std::string(ascii);
        pos_ += symbol.size();
        ++column_;
        return;
      }
    }
    for (std::string_view two : {"&&", "||", "!=", "<=", ">=", "^^", "=="}) {
      if (StartsWith(two)) {
        return Punct(t, two == "==" ? "=" : std::string(two), 2);
      }
    }
    if (std::string_view(".{}(),|!=<>-").find(c) != std::string_view::npos) {
      return Punct(t, std::string(1, c), 1);
    }
    Fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  return Lexer(text).Run();
}

}  // namespace rdfi
