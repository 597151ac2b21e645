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

#include <stdexcept>
#include <string>

namespace relind {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value outside its mathematical domain: |v| >= c, non-finite coordinates,
/// probabilities outside [0, 1].
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A proposition or query referenced a variable the scenario never declared.
class DeclarationError : public Error {
 public:
  explicit DeclarationError(const std::string& variable)
      : Error("undeclared variable: " + variable), variable_(variable) {}

  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an event of probability zero, or an otherwise
/// self-contradictory probability model.
class ModelInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace relind
