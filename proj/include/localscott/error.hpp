/*
 * Copyright 2026 The localscott Authors
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

#ifndef LOCALSCOTT_ERROR_HPP
#define LOCALSCOTT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace localscott {

/// A table, family or document that violates an axiom of the structure it
/// claims to describe.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strict-mode instance lacking a singleton of X or {1_G}.
class StrictModeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed instance document; the message carries the location.
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Operation called outside its domain (point outside U, empty H, n = 0 ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace localscott

#endif  // LOCALSCOTT_ERROR_HPP
