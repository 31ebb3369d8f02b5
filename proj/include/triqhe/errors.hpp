// Copyright 2026 The triqhe Authors
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

#ifndef TRIQHE_ERRORS_HPP
#define TRIQHE_ERRORS_HPP

#include <stdexcept>

namespace triqhe {

// Malformed text input: circuit files, key files, state files, job files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Objects whose sizes cannot be combined: wrong register widths, wire
// indices out of range, operators applied to states of another dimension.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative search or fit exhausted its budget without reaching the
// requested accuracy.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace triqhe

#endif  // TRIQHE_ERRORS_HPP
