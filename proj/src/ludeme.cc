// Copyright 2026 The efg2ludii Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "efg2ludii/ludeme.h"

#include <algorithm>

#include "efg2ludii/decimal.h"

namespace efg2ludii {

Ludeme Ludeme::Term(std::string head, std::vector<Ludeme> args) {
  Ludeme l;
  l.kind = Kind::kTerm;
  l.text = std::move(head);
  l.children = std::move(args);
  return l;
}

Ludeme Ludeme::Array(std::vector<Ludeme> items) {
  Ludeme l;
  l.kind = Kind::kArray;
  l.children = std::move(items);
  return l;
}

Ludeme Ludeme::Int(std::int64_t value) { return Integer(std::to_string(value)); }

Ludeme Ludeme::Integer(std::string digits) {
  Ludeme l;
  l.kind = Kind::kInteger;
  l.text = std::move(digits);
  return l;
}

Ludeme Ludeme::Dec(std::string literal) {
  Ludeme l;
  l.kind = Kind::kDecimal;
  l.text = std::move(literal);
  return l;
}

Ludeme Ludeme::Str(std::string value) {
  Ludeme l;
  l.kind = Kind::kString;
  l.text = std::move(value);
  return l;
}

Ludeme Ludeme::Sym(std::string value) {
  Ludeme l;
  l.kind = Kind::kSymbol;
  l.text = std::move(value);
  return l;
}

Ludeme Ludeme::Named(std::string arg_name) && {
  name = std::move(arg_name);
  return std::move(*this);
}

namespace {

enum class Tok { kOpen, kClose, kOpenBrace, kCloseBrace, kString, kName, kAtom, kEnd };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token Next() {
    SkipBlank();
    SourcePos start = pos_;
    if (AtEnd()) return {Tok::kEnd, "", start};
    char c = Peek();
    switch (c) {
      case '(': Advance(); return {Tok::kOpen, "(", start};
      case ')': Advance(); return {Tok::kClose, ")", start};
      case '{': Advance(); return {Tok::kOpenBrace, "{", start};
      case '}': Advance(); return {Tok::kCloseBrace, "}", start};
      case '"': return String(start);
      default: break;
    }
    std::string atom;
    while (!AtEnd()) {
      char d = Peek();
      if (IsBlank(d) || d == '(' || d == ')' || d == '{' || d == '}' || d == '"') break;
      if (d == ':') {
        Advance();
        if (atom.empty()) throw ParseError(start, "named argument without a name");
        return {Tok::kName, atom, start};
      }
      if (static_cast<unsigned char>(d) < 0x20) {
        throw ParseError(pos_, "control character in input");
      }
      atom.push_back(d);
      Advance();
    }
    return {Tok::kAtom, atom, start};
  }

 private:
  static bool IsBlank(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }
  bool AtEnd() const { return pos_.offset >= text_.size(); }
  char Peek() const { return text_[pos_.offset]; }

  void Advance() {
    if (Peek() == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++pos_.offset;
  }

  void SkipBlank() {
    while (!AtEnd()) {
      if (IsBlank(Peek())) {
        Advance();
      } else if (Peek() == '/' && pos_.offset + 1 < text_.size() &&
                 text_[pos_.offset + 1] == '/') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        break;
      }
    }
  }

  Token String(const SourcePos& start) {
    Advance();
    std::string value;
    while (!AtEnd() && Peek() != '"') {
      if (Peek() == '\n') throw ParseError(start, "unterminated string literal");
      value.push_back(Peek());
      Advance();
    }
    if (AtEnd()) throw ParseError(start, "unterminated string literal");
    Advance();
    return {Tok::kString, value, start};
  }

  std::string_view text_;
  SourcePos pos_;
};

bool IsIntegerLiteral(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lexer_(text) { Shift(); }

  Ludeme ReadAll() {
    if (tok_.kind == Tok::kEnd) throw ParseError(tok_.pos, "empty input");
    Ludeme out = Value();
    if (tok_.kind != Tok::kEnd) {
      throw ParseError(tok_.pos, "unexpected trailing input '" + tok_.text + "'");
    }
    return out;
  }

 private:
  void Shift() { tok_ = lexer_.Next(); }

  Ludeme Value() {
    SourcePos at = tok_.pos;
    std::string name;
    if (tok_.kind == Tok::kName) {
      name = tok_.text;
      Shift();
    }
    Ludeme out;
    switch (tok_.kind) {
      case Tok::kOpen: {
        Shift();
        if (tok_.kind != Tok::kAtom) {
          throw ParseError(tok_.pos, "expected a ludeme name after '('");
        }
        out = Ludeme::Term(tok_.text);
        Shift();
        while (tok_.kind != Tok::kClose) {
          if (tok_.kind == Tok::kEnd) throw ParseError(at, "unbalanced '('");
          out.children.push_back(Value());
        }
        Shift();
        break;
      }
      case Tok::kOpenBrace: {
        Shift();
        out = Ludeme::Array();
        while (tok_.kind != Tok::kCloseBrace) {
          if (tok_.kind == Tok::kEnd) throw ParseError(at, "unbalanced '{'");
          out.children.push_back(Value());
        }
        Shift();
        break;
      }
      case Tok::kString:
        out = Ludeme::Str(tok_.text);
        Shift();
        break;
      case Tok::kAtom:
        if (IsIntegerLiteral(tok_.text)) {
          out = Ludeme::Integer(tok_.text);
        } else if (Decimal::IsLiteral(tok_.text)) {
          out = Ludeme::Dec(tok_.text);
        } else {
          out = Ludeme::Sym(tok_.text);
        }
        Shift();
        break;
      case Tok::kName:
        throw ParseError(tok_.pos, "named argument '" + tok_.text + ":' has no value");
      default:
        throw ParseError(tok_.pos, "unexpected '" + tok_.text + "'");
    }
    out.name = std::move(name);
    out.pos = at;
    return out;
  }

  Lexer lexer_;
  Token tok_;
};

bool IsAtom(const Ludeme& l) {
  return l.kind != Ludeme::Kind::kTerm && l.kind != Ludeme::Kind::kArray;
}

// Flat means the node renders on a single line: no array below it holds a
// term.
bool IsFlat(const Ludeme& l) {
  if (IsAtom(l)) return true;
  if (l.kind == Ludeme::Kind::kArray) {
    for (const Ludeme& c : l.children) {
      if (c.kind == Ludeme::Kind::kTerm || !IsFlat(c)) return false;
    }
    return true;
  }
  return std::all_of(l.children.begin(), l.children.end(), IsFlat);
}

void RenderFlat(const Ludeme& l, std::string& out) {
  if (!l.name.empty()) out += l.name + ":";
  switch (l.kind) {
    case Ludeme::Kind::kString:
      out += '"' + l.text + '"';
      return;
    case Ludeme::Kind::kInteger:
    case Ludeme::Kind::kDecimal:
    case Ludeme::Kind::kSymbol:
      out += l.text;
      return;
    case Ludeme::Kind::kArray:
      out += '{';
      for (std::size_t i = 0; i < l.children.size(); ++i) {
        if (i) out += ' ';
        RenderFlat(l.children[i], out);
      }
      out += '}';
      return;
    case Ludeme::Kind::kTerm:
      out += '(' + l.text;
      for (const Ludeme& c : l.children) {
        out += ' ';
        RenderFlat(c, out);
      }
      out += ')';
      return;
  }
}

void Render(const Ludeme& l, int indent, std::string& out);

void NewLine(int indent, std::string& out) {
  out += '\n';
  out.append(indent, ' ');
}

void Render(const Ludeme& l, int indent, std::string& out) {
  if (IsFlat(l)) {
    RenderFlat(l, out);
    return;
  }
  if (!l.name.empty()) out += l.name + ":";
  if (l.kind == Ludeme::Kind::kArray) {
    out += '{';
    for (const Ludeme& c : l.children) {
      NewLine(indent + 2, out);
      Render(c, indent + 2, out);
    }
    NewLine(indent, out);
    out += '}';
    return;
  }
  out += '(' + l.text;
  const std::size_t n = l.children.size();
  const bool inline_terms = l.text == "if" || l.text == "move";
  std::size_t i = 0;
  while (i + 1 < n) {
    const Ludeme& c = l.children[i];
    bool keep = IsFlat(c) && (c.kind != Ludeme::Kind::kTerm || inline_terms);
    if (!keep) break;
    out += ' ';
    RenderFlat(c, out);
    ++i;
  }
  if (i + 1 == n && !IsFlat(l.children[i]) &&
      (l.children[i].kind == Ludeme::Kind::kArray || n == 1)) {
    out += ' ';
    Render(l.children[i], indent, out);
  } else {
    for (; i < n; ++i) {
      // The else-branch of an if stays at the if's own indentation.
      int child_indent = (l.text == "if" && i == 2) ? indent : indent + 2;
      NewLine(child_indent, out);
      Render(l.children[i], child_indent, out);
    }
  }
  out += ')';
}

int CountTermsImpl(const Ludeme& l, std::string_view head) {
  int count = l.IsTerm(head) ? 1 : 0;
  for (const Ludeme& c : l.children) count += CountTermsImpl(c, head);
  return count;
}

}  // namespace

Ludeme ReadLudeme(std::string_view text) { return Reader(text).ReadAll(); }

std::string RenderLudeme(const Ludeme& ludeme) {
  std::string out;
  Render(ludeme, 0, out);
  out += '\n';
  return out;
}

std::vector<std::string> Tokenize(std::string_view text) {
  Lexer lexer(text);
  std::vector<std::string> out;
  for (Token t = lexer.Next(); t.kind != Tok::kEnd; t = lexer.Next()) {
    switch (t.kind) {
      case Tok::kString: out.push_back('"' + t.text + '"'); break;
      case Tok::kName: out.push_back(t.text + ":"); break;
      default: out.push_back(t.text); break;
    }
  }
  return out;
}

int CountTerms(const Ludeme& root, std::string_view head) {
  return CountTermsImpl(root, head);
}

}  // namespace efg2ludii
