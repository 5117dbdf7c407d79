// Copyright 2026 The lingattack Authors
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

#ifndef LINGATTACK_ERROR_H_
#define LINGATTACK_ERROR_H_

#include <stdexcept>
#include <string>

namespace lingattack {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad TSV/JSONL line, bad hex, unknown enum name.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed data violating an invariant (asymmetric partner, cross-block
// confusable, missing script coverage, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Failure talking to a remote classifier or embedding service.
class RemoteError : public Error {
 public:
  using Error::Error;
};

}  // namespace lingattack

#endif  // LINGATTACK_ERROR_H_
