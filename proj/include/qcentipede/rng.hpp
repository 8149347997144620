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

#ifndef QCENTIPEDE_RNG_HPP_
#define QCENTIPEDE_RNG_HPP_

#include <cstdint>
#include <random>

namespace qcentipede {

// Reproducible uniform source.
//
// std::mt19937_64 has a bit-exact definition in the standard, but the
// std::*_distribution adaptors do not, so results from them can differ
// between standard libraries. We only ever take raw 64-bit words from the
// engine and map them to doubles ourselves: the top 53 bits scaled by 2^-53,
// giving a value in [0, 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcentipede

#endif  // QCENTIPEDE_RNG_HPP_
