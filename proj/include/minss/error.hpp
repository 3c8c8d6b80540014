// Copyright 2026 The minss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace minss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters or inputs violate a documented precondition.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input (JSON, CSV, rationals on the command line).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Entropy order not admissible for the requested measure.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

// Combine was asked to reconstruct from a set that is not qualified.
class NotQualifiedError : public Error {
 public:
  NotQualifiedError() : Error("not a qualified set") {}
  explicit NotQualifiedError(const std::string& what)
      : Error("not a qualified set: " + what) {}
};

}  // namespace minss
