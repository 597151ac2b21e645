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

#pragma once

#include "relind/errors.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace relind {

/// Strong-Kleene truth value. The enumerator order is the information-free
/// lattice order False < Indeterminate < True used by and/or.
enum class Truth : std::uint8_t { False = 0, Indeterminate = 1, True = 2 };

const char* to_string(Truth v);
inline bool is_determinate(Truth v) { return v != Truth::Indeterminate; }
inline Truth from_bool(bool b) { return b ? Truth::True : Truth::False; }

enum class Connective { Not, And, Or, Xor, Equals };

const char* to_string(Connective kind);

Truth kleene_not(Truth a);
Truth kleene_and(Truth a, Truth b);
Truth kleene_or(Truth a, Truth b);
Truth kleene_xor(Truth a, Truth b);
Truth kleene_equals(Truth a, Truth b);

/// Applies `kind` to `inputs`. `not` takes exactly one input; and/or/xor/
/// equals take two or more (folded left). Throws ArityError otherwise.
Truth kleene_connective(Connective kind, std::span<const Truth> inputs);

/// Claim "variable = value" about a single bit.
struct Atom {
  std::string variable;
  int value = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Immutable proposition tree over atoms.
///
/// Text syntax (loosest binding first):
///   equiv := or ('<->' or)*
///   or    := and ('|' and)*
///   and   := xor ('&' xor)*
///   xor   := unary ('^' unary)*
///   unary := '!' unary | '(' equiv ')' | ident '=' ('0'|'1')
class Proposition {
 public:
  struct Compound {
    Connective kind;
    std::vector<Proposition> children;
  };

  static Proposition atom(std::string variable, int value);
  static Proposition negation(Proposition p);
  static Proposition compound(Connective kind, std::vector<Proposition> children);

  /// Throws PropositionParseError on malformed text.
  static Proposition parse(std::string_view text);

  bool is_atom() const { return std::holds_alternative<Atom>(*node_); }
  const Atom& as_atom() const { return std::get<Atom>(*node_); }
  const Compound& as_compound() const { return std::get<Compound>(*node_); }

  /// Fully parenthesised text form; parse(to_string()) reproduces the tree.
  std::string to_string() const;
  std::set<std::string> variables() const;

  friend bool operator==(const Proposition& a, const Proposition& b);

 private:
  using Node = std::variant<Atom, Compound>;
  explicit Proposition(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}
  std::shared_ptr<const Node> node_;
};

/// Syntax error in proposition text; `offset` is a byte index into the input.
class PropositionParseError : public Error {
 public:
  PropositionParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace relind
