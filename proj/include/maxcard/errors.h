// Copyright 2020 The Authors.
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

#ifndef MAXCARD_ERRORS_H_
#define MAXCARD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace maxcard {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration or exhaustive check was asked to work on an input that is
// larger than its configured guard.
class GuardExceededError : public Error {
 public:
  using Error::Error;
};

// A query touched an element outside the oracle's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A protocol program broke the access rules of the communication model.
class AccessViolationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity did not agree.
class DisagreementError : public Error {
 public:
  using Error::Error;
};

}  // namespace maxcard

#endif  // MAXCARD_ERRORS_H_
