/*
 * Copyright 2026 Filature Contributors
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

#ifndef FILATURE_ERRORS_HPP_
#define FILATURE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filature {

/// Root of the library's error hierarchy. Callers that do not care about
/// the precise failure can catch this single type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: broken JSON or CSV, a missing or mistyped field,
/// an unknown field, or a structurally unusable document. line/column are
/// 1-based when known and 0 when the failure has no textual position.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0,
                      std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An identifier that must be unique appears twice (message id, thread id,
/// rule id, or a second model for the same category).
class DuplicateId : public Error {
 public:
  using Error::Error;
};

/// A message names a parent_id that does not exist in its thread.
class DanglingParent : public Error {
 public:
  using Error::Error;
};

/// More than one message in a thread has no parent_id.
class MultipleRoots : public Error {
 public:
  using Error::Error;
};

/// A lexicon rule is unusable: empty pattern, unknown target or kind,
/// or a regex that does not compile.
class InvalidRule : public Error {
 public:
  using Error::Error;
};

/// A model file does not provide a model for every support category.
class IncompleteModels : public Error {
 public:
  using Error::Error;
};

/// A weight is negative, not finite, or a model has no positive weight.
class InvalidWeight : public Error {
 public:
  using Error::Error;
};

/// A name points at nothing: unknown slot, reaction, category, or rule id.
class InvalidReference : public Error {
 public:
  using Error::Error;
};

/// Threshold parameters outside [0,1] or ordered inconsistently.
class InvalidThresholds : public Error {
 public:
  using Error::Error;
};

/// A thread id required by an operation has no corresponding data.
class UnknownThread : public Error {
 public:
  using Error::Error;
};

/// Validation needs a script for a label that was never induced.
class MissingScript : public Error {
 public:
  using Error::Error;
};

}  // namespace filature

#endif  // FILATURE_ERRORS_HPP_
