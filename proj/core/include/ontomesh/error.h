// Copyright 2026 The OntoMesh Authors
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

#ifndef ONTOMESH_ERROR_H_
#define ONTOMESH_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ontomesh {

enum class ErrorCode {
  kIo,
  kParse,
  kEmptyCorpus,
  kInvalidArgument,
  kNotFound,
  kConflict,
  kCorruption,
  kInvariant,
  kData,  // malformed input rejected in strict mode
  kFetch,
  kIntegrity,
  kExtraction,
  kProvenance,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base exception for every failure raised by the library. The code drives
// the CLI exit status; the message is meant for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// JSON syntax error; byte_offset is the position reported by the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t byte_offset)
      : Error(ErrorCode::kParse, message), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Remote fetch failure. status is the HTTP status, or 0 when no response
// was received at all.
class FetchError : public Error {
 public:
  FetchError(const std::string& message, int status)
      : Error(ErrorCode::kFetch, message), status_(status) {}

  int status() const { return status_; }

 private:
  int status_;
};

}  // namespace ontomesh

#endif  // ONTOMESH_ERROR_H_
