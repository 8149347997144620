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

#ifndef QCENTIPEDE_CONJECTURE_LAB_HPP_
#define QCENTIPEDE_CONJECTURE_LAB_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qcentipede/ctz_protocol.hpp"
#include "qcentipede/state_vector.hpp"

namespace qcentipede {

inline constexpr int kConjectureMaxRounds = 8;
inline constexpr double kConjectureTolerance = 1e-12;

// Evidence for the two n-round claims: (1) the last round is never the
// defection round, (2) the all-0 and all-pi corners give the same state up to
// a global phase. Nothing here assumes either claim holds.
struct ConjectureReport {
  int n_rounds = 0;
  int samples = 0;
  double max_last_round_defect_prob = 0.0;
  bool collapse_holds = false;
  bool corner_degenerate = false;
  std::optional<Amplitude> corner_phase;
  // Profile attaining the maximum; empty when collapse holds.
  std::optional<StrategyProfile> witness;
};

// Mass of the outcome "defect at round n" in the protocol's final state.
double last_round_defect_probability(const StrategyProfile& profile);

struct CornerDegeneracy {
  bool degenerate = false;
  // c with state(all pi) = c * state(all 0), when degenerate.
  std::optional<Amplitude> phase;
};

// Throws std::invalid_argument if n < 2.
CornerDegeneracy corner_degeneracy_check(int n_rounds, double tol = kConjectureTolerance);

// `samples` uniform profiles on [0, pi]^n plus all 2^n corner profiles.
// Random profiles for round count n are drawn with seed + n.
ConjectureReport evaluate_conjecture(int n_rounds, int samples, std::uint64_t seed,
                                     double tol = kConjectureTolerance);

// One report per n in [n_min, n_max]. Throws std::invalid_argument unless
// 2 <= n_min <= n_max <= kConjectureMaxRounds and samples >= 1.
std::vector<ConjectureReport> conjecture_sweep(int n_min, int n_max, int samples,
                                               std::uint64_t seed,
                                               double tol = kConjectureTolerance);

}  // namespace qcentipede

#endif  // QCENTIPEDE_CONJECTURE_LAB_HPP_
