// Copyright 2026 The transdir Authors.
//
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

#ifndef TRANSDIR_ERROR_H_
#define TRANSDIR_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace transdir {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problems with user-supplied data (corpora, score files, arguments).
// The command-line tool maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Problems obtaining scores from a backend. Exit code 3.
class ScoringFailure : public Error {
 public:
  explicit ScoringFailure(const std::string& what, std::string request_id = {})
      : Error(what), request_id_(std::move(request_id)) {}

  // Id of the request being served when the failure happened, if known.
  const std::string& request_id() const { return request_id_; }

 private:
  std::string request_id_;
};

// --- scoring -------------------------------------------------------------

class ScorerUnavailable : public ScoringFailure {
 public:
  using ScoringFailure::ScoringFailure;
};

// The backend answered a request with an "error" field.
class ScorerError : public ScoringFailure {
 public:
  using ScoringFailure::ScoringFailure;
};

class ProtocolViolation : public ScoringFailure {
 public:
  using ScoringFailure::ScoringFailure;
};

// A logprob was positive or non-finite, or token list lengths disagree.
class InvalidScores : public ScoringFailure {
 public:
  using ScoringFailure::ScoringFailure;
};

// --- parsing / ingestion -------------------------------------------------

class ParseError : public InputError {
 public:
  ParseError(const std::string& where, std::size_t line, const std::string& what);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ConflictingDuplicate : public InputError {
 public:
  ConflictingDuplicate(const std::string& key_hex, const std::string& where);

  const std::string& key_hex() const { return key_hex_; }

 private:
  std::string key_hex_;
};

class InvalidArgument : public InputError {
 public:
  using InputError::InputError;
};

class HeterogeneousDocument : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateSegmentId : public InputError {
 public:
  using InputError::InputError;
};

class LineCountMismatch : public InputError {
 public:
  LineCountMismatch(std::size_t x_lines, std::size_t y_lines);

  std::size_t x_lines() const { return x_lines_; }
  std::size_t y_lines() const { return y_lines_; }

 private:
  std::size_t x_lines_;
  std::size_t y_lines_;
};

class OneSidedEmptyLine : public InputError {
 public:
  explicit OneSidedEmptyLine(std::size_t line);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// --- detection / statistics ----------------------------------------------

class MismatchedPair : public InputError {
 public:
  using InputError::InputError;
};

class EmptyDocument : public InputError {
 public:
  using InputError::InputError;
};

class NoItemsForDirection : public InputError {
 public:
  using InputError::InputError;
};

class EmptyInput : public InputError {
 public:
  using InputError::InputError;
};

class TooFewSegments : public InputError {
 public:
  using InputError::InputError;
};

class TooManySegments : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedFormat : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace transdir

#endif  // TRANSDIR_ERROR_H_
