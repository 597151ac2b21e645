//  Copyright 2026 The relind Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "relind/proposition.hpp"

#include <cctype>

namespace relind {

const char* to_string(Truth v) {
  switch (v) {
    case Truth::False: return "false";
    case Truth::Indeterminate: return "indeterminate";
    case Truth::True: return "true";
  }
  return "?";
}

const char* to_string(Connective kind) {
  switch (kind) {
    case Connective::Not: return "not";
    case Connective::And: return "and";
    case Connective::Or: return "or";
    case Connective::Xor: return "xor";
    case Connective::Equals: return "equals";
  }
  return "?";
}

Truth kleene_not(Truth a) {
  switch (a) {
    case Truth::False: return Truth::True;
    case Truth::True: return Truth::False;
    case Truth::Indeterminate: break;
  }
  return Truth::Indeterminate;
}

Truth kleene_and(Truth a, Truth b) { return a < b ? a : b; }
Truth kleene_or(Truth a, Truth b) { return a < b ? b : a; }

Truth kleene_xor(Truth a, Truth b) {
  if (!is_determinate(a) || !is_determinate(b)) return Truth::Indeterminate;
  return from_bool(a != b);
}

Truth kleene_equals(Truth a, Truth b) { return kleene_not(kleene_xor(a, b)); }

Truth kleene_connective(Connective kind, std::span<const Truth> inputs) {
  if (kind == Connective::Not) {
    if (inputs.size() != 1) throw ArityError("not takes exactly one operand");
    return kleene_not(inputs.front());
  }
  if (inputs.size() < 2) {
    throw ArityError(std::string(to_string(kind)) + " takes at least two operands");
  }
  Truth acc = inputs.front();
  for (Truth v : inputs.subspan(1)) {
    switch (kind) {
      case Connective::And: acc = kleene_and(acc, v); break;
      case Connective::Or: acc = kleene_or(acc, v); break;
      case Connective::Xor: acc = kleene_xor(acc, v); break;
      case Connective::Equals: acc = kleene_equals(acc, v); break;
      case Connective::Not: break;
    }
  }
  return acc;
}

Proposition Proposition::atom(std::string variable, int value) {
  if (value != 0 && value != 1) throw DomainError("atom value must be a bit");
  if (variable.empty()) throw DomainError("atom needs a variable name");
  return Proposition(Node(Atom{std::move(variable), value}));
}

Proposition Proposition::negation(Proposition p) {
  return compound(Connective::Not, {std::move(p)});
}

Proposition Proposition::compound(Connective kind, std::vector<Proposition> children) {
  if (kind == Connective::Not ? children.size() != 1 : children.size() < 2) {
    throw ArityError(std::string("wrong number of operands for ") + relind::to_string(kind));
  }
  return Proposition(Node(Compound{kind, std::move(children)}));
}

std::string Proposition::to_string() const {
  if (is_atom()) {
    const auto& a = as_atom();
    return a.variable + "=" + std::to_string(a.value);
  }
  const auto& c = as_compound();
  if (c.kind == Connective::Not) return "!" + c.children.front().to_string();
  const char* op = "";
  switch (c.kind) {
    case Connective::And: op = " & "; break;
    case Connective::Or: op = " | "; break;
    case Connective::Xor: op = " ^ "; break;
    case Connective::Equals: op = " <-> "; break;
    case Connective::Not: break;
  }
  std::string out = "(";
  for (std::size_t i = 0; i < c.children.size(); ++i) {
    if (i) out += op;
    out += c.children[i].to_string();
  }
  return out + ")";
}

std::set<std::string> Proposition::variables() const {
  std::set<std::string> out;
  if (is_atom()) {
    out.insert(as_atom().variable);
    return out;
  }
  for (const auto& ch : as_compound().children) out.merge(ch.variables());
  return out;
}

bool operator==(const Proposition& a, const Proposition& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_atom() != b.is_atom()) return false;
  if (a.is_atom()) return a.as_atom() == b.as_atom();
  const auto& x = a.as_compound();
  const auto& y = b.as_compound();
  return x.kind == y.kind && x.children == y.children;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Proposition parse() {
    Proposition p = equiv();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw PropositionParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  // Parses one precedence level; `next` parses the tighter level.
  template <typename Next>
  Proposition level(std::string_view op, Connective kind, Next next) {
    std::vector<Proposition> parts{(this->*next)()};
    while (accept(op)) parts.push_back((this->*next)());
    if (parts.size() == 1) return std::move(parts.front());
    return Proposition::compound(kind, std::move(parts));
  }

  Proposition equiv() { return level("<->", Connective::Equals, &Parser::disj); }
  Proposition disj() { return level("|", Connective::Or, &Parser::conj); }
  Proposition conj() { return level("&", Connective::And, &Parser::exclusive); }
  Proposition exclusive() { return level("^", Connective::Xor, &Parser::unary); }

  Proposition unary() {
    if (accept("!")) return Proposition::negation(unary());
    if (accept("(")) {
      Proposition inner = equiv();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      fail("expected a variable name");
    }
    std::string name(text_.substr(start, pos_ - start));
    if (!accept("=")) fail("expected '=' after variable '" + name + "'");
    skip_ws();
    if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1')) fail("expected bit 0 or 1");
    int value = text_[pos_++] - '0';
    return Proposition::atom(std::move(name), value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Proposition Proposition::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace relind
