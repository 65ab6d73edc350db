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

#ifndef RDFI_LEXER_H_
#define RDFI_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

namespace rdfi {

enum class TokenKind {
  kIri,        // text without brackets
  kBlank,      // label
  kELiteral,   // name
  kVariable,   // name; special set for "?x!s"
  kString,     // unescaped contents
  kNumber,     // unsigned "7", "5/2" or "0.25"
  kIdent,
  kDirective,  // "lang" or "global"
  kPunct,      // . { } ( ) , | && || ! != = < <= > >= - ^^
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  bool special = false;
  int line = 1;
  int column = 1;
};

// Splits text into tokens, ending with kEnd. '#' starts a comment unless it
// introduces "#lang" or "#global". Throws ParseError.
std::vector<Token> Tokenize(std::string_view text);

}  // namespace rdfi

#endif  // RDFI_LEXER_H_
