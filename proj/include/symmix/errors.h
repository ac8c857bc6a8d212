// Copyright 2026 The symmix Authors.
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

#ifndef SYMMIX_ERRORS_H_
#define SYMMIX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace symmix {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied argument is outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Partitions or distributions of different weight were combined.
class WeightMismatchError : public Error {
 public:
  using Error::Error;
};

// Distributions supported on different cosets of A_n were compared.
class ParityMismatchError : public Error {
 public:
  using Error::Error;
};

// A closed-form multiplicity was requested outside r <= n - lambda_2.
class ValidityRangeError : public Error {
 public:
  using Error::Error;
};

// The request exceeds a configured computational ceiling.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// An internal cross-check failed. Always indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace symmix

#endif  // SYMMIX_ERRORS_H_
