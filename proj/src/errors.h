// Copyright 2026 The unipm Authors
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

#ifndef UNIPM_ERRORS_H_
#define UNIPM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace unipm {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph, interval or trace text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition (removed vertex, bad partition,
// matching that is not perfect, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// An Operation 1 / Operation 2 precondition failed.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An algorithm could not complete on its input, e.g. PMinCF found no edge to
// reseed from or the interval sweep got stuck.
class AlgorithmError : public Error {
 public:
  using Error::Error;
};

// An internal self-check failed. Seeing one of these is a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace unipm

#endif  // UNIPM_ERRORS_H_
