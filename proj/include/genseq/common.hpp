/*
 * Copyright 2026 The genseq Authors
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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace genseq {

using Integer = mpz_class;
using Rational = mpq_class;

/// A positive integer or infinity (std::nullopt).
using Multiplicity = std::optional<std::int64_t>;

inline std::string to_string(const Multiplicity& m) {
  return m ? std::to_string(*m) : std::string("inf");
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Caller violated a precondition (mismatched bases, non-positive generator, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input model violates the standing hypotheses of the construction.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed; `position` is a 0-based offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace genseq
