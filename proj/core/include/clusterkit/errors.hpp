// Copyright 2026 The cluster-kit Authors
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

#ifndef CLUSTERKIT_ERRORS_HPP_
#define CLUSTERKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace clusterkit {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller handed us something malformed: bad sizes, a matrix that is not
// skew-symmetrizable, a disconnected diagram, an index out of range.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A Laurent division that should have been exact left a remainder. On a seed
// reached from x1..xn by mutation this cannot happen, so it means the seed
// handed in was not a genuine seed.
class InexactDivision : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A state or search cap was hit before closure. The question is undecided
// at this cap, which is different from a negative answer.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. These guard properties the
// mathematics guarantees; seeing one is a bug (or a falsified standing
// assumption, e.g. two equal clusters carrying different matrices).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace clusterkit

#endif  // CLUSTERKIT_ERRORS_HPP_
