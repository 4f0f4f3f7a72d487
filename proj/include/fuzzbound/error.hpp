/*
 * Copyright 2026 The fuzzbound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzbound {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truth degree outside [0,1] (or NaN).
class InvalidDegree : public Error {
 public:
  using Error::Error;
};

/// Operands whose shapes do not conform (relation/set sizes, prefix lengths).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Two automata that do not share the same alphabet.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  using Error::Error;
};

class UnknownStructure : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An automaton violating the data-model invariants.
class InvalidAutomaton : public Error {
 public:
  using Error::Error;
};

/// Formula outside the requested dialect or deeper than the relation index.
class DialectError : public Error {
 public:
  using Error::Error;
};

/// Word enumeration would exceed the configured cap.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `position()` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fuzzbound
