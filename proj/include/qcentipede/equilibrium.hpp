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

#ifndef QCENTIPEDE_EQUILIBRIUM_HPP_
#define QCENTIPEDE_EQUILIBRIUM_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qcentipede/ctz_protocol.hpp"
#include "qcentipede/game_model.hpp"

namespace qcentipede {

// Candidate angles per round for the three-round sweep, in table order:
// theta1 and theta2 over {0, pi, pi/2}, theta3 over {0, pi}.
const std::vector<double>& table1_round_values(int round);

struct SweepRow {
  std::array<double, 3> thetas{};
  PayoffPair exact_payoffs;
  PayoffPair mc_payoffs;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

// The 18 grid profiles with theta1 varying fastest, then theta2, then theta3.
// Row i is sampled with seed + i. Throws std::invalid_argument for shots == 0
// or a schedule that is not three rounds.
std::vector<SweepRow> sweep_table1(std::uint64_t shots, std::uint64_t seed,
                                   const PayoffSchedule& schedule = PayoffSchedule::centipede3());

struct EquilibriumReport {
  StrategyProfile profile;
  bool is_nash = false;
  // Largest improvement either player found over their current payoff.
  PayoffPair best_deviation_gain;
  int deviation_grid_size = 0;
};

// Best-response check by exhaustive search. Each player deviates jointly over
// all rounds they own (player 1 the odd rounds, player 2 the even rounds)
// while the opponent's rounds stay fixed. Deviations for round k range over
// candidates[k - 1].
EquilibriumReport certify_nash(const StrategyProfile& profile, const PayoffSchedule& schedule,
                               std::span<const std::vector<double>> candidates, double tol);

// Same, with a uniform grid of `grid_points` angles spanning [0, pi] for every
// round. Throws std::invalid_argument if grid_points < 2.
EquilibriumReport certify_nash(const StrategyProfile& profile, const PayoffSchedule& schedule,
                               int grid_points, double tol);

std::vector<double> uniform_angle_grid(int points);

// Partial derivatives of the expected payoffs of the three-round game with
// the default schedule.
struct GradientVector {
  double d1_dtheta1 = 0.0;
  double d1_dtheta2 = 0.0;
  double d1_dtheta3 = 0.0;
  double d2_dtheta1 = 0.0;
  double d2_dtheta2 = 0.0;
  double d2_dtheta3 = 0.0;

  std::array<double, 6> as_array() const {
    return {d1_dtheta1, d1_dtheta2, d1_dtheta3, d2_dtheta1, d2_dtheta2, d2_dtheta3};
  }
  double max_abs() const;
  double max_abs_diff(const GradientVector& other) const;
};

// Closed-form partials of $1 = P(defect@1) + 2 P(coop) and $2 = 2 P(defect@2) + 2 P(coop).
GradientVector payoff_gradient_analytic(std::span<const double, 3> thetas);
GradientVector payoff_gradient_analytic(const StrategyProfile& profile);

// Central differences of expected_payoffs_exact with step h. Throws
// std::invalid_argument unless 0 < h <= 1e-3.
GradientVector payoff_gradient_fd(std::span<const double, 3> thetas, double h,
                                  const PayoffSchedule& schedule = PayoffSchedule::centipede3());

}  // namespace qcentipede

#endif  // QCENTIPEDE_EQUILIBRIUM_HPP_
