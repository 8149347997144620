// Copyright 2026 The qcentipede Authors
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

#ifndef QCENTIPEDE_ERRORS_HPP_
#define QCENTIPEDE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qcentipede {

// Raised when a post-condition that should hold for every valid input is
// observed to fail (norm drift, counts not summing to shots, ...). Callers
// treat this as a bug, not as bad user input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace qcentipede

#endif  // QCENTIPEDE_ERRORS_HPP_
