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

#include "qcentipede/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcentipede {
namespace {

constexpr double kPi = std::numbers::pi;

// Visits every assignment of candidate values to `rounds`, writing into
// `thetas` in place. Odometer order, last listed round fastest.
template <class Fn>
void for_each_assignment(std::vector<double>& thetas, std::span<const int> rounds,
                         std::span<const std::vector<double>> candidates, Fn&& fn) {
  std::vector<std::size_t> digit(rounds.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < rounds.size(); ++k) {
      thetas[static_cast<std::size_t>(rounds[k] - 1)] =
          candidates[static_cast<std::size_t>(rounds[k] - 1)][digit[k]];
    }
    fn(thetas);
    std::size_t k = rounds.size();
    while (k > 0) {
      --k;
      const auto& values = candidates[static_cast<std::size_t>(rounds[k] - 1)];
      if (++digit[k] < values.size()) break;
      digit[k] = 0;
      if (k == 0) return;
    }
    if (rounds.empty()) return;
  }
}

double best_gain(const StrategyProfile& profile, const PayoffSchedule& schedule,
                 std::span<const std::vector<double>> candidates, int player) {
  std::vector<int> owned;
  for (int r = 1; r <= static_cast<int>(profile.rounds()); ++r) {
    if ((r % 2 == 1) == (player == 1)) owned.push_back(r);
  }
  const PayoffPair base = expected_payoffs_exact(profile, schedule);
  const double current = player == 1 ? base.player1 : base.player2;

  std::vector<double> thetas(profile.thetas().begin(), profile.thetas().end());
  double best = -std::numeric_limits<double>::infinity();
  for_each_assignment(thetas, owned, candidates, [&](const std::vector<double>& t) {
    const PayoffPair p = expected_payoffs_exact(std::span<const double>(t), schedule);
    best = std::max(best, (player == 1 ? p.player1 : p.player2) - current);
  });
  return best;
}

}  // namespace

const std::vector<double>& table1_round_values(int round) {
  static const std::vector<double> kThreeLevels{0.0, kPi, kPi / 2.0};
  static const std::vector<double> kTwoLevels{0.0, kPi};
  if (round == 1 || round == 2) return kThreeLevels;
  if (round == 3) return kTwoLevels;
  throw std::out_of_range("table rounds are 1..3, got " + std::to_string(round));
}

std::vector<SweepRow> sweep_table1(std::uint64_t shots, std::uint64_t seed,
                                   const PayoffSchedule& schedule) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  if (schedule.rounds() != 3) throw std::invalid_argument("table sweep needs a 3-round schedule");

  std::vector<SweepRow> rows;
  for (double t3 : table1_round_values(3)) {
    for (double t2 : table1_round_values(2)) {
      for (double t1 : table1_round_values(1)) {
        const StrategyProfile profile({t1, t2, t3});
        const std::uint64_t row_seed = seed + rows.size();
        rows.push_back({{t1, t2, t3},
                        expected_payoffs_exact(profile, schedule),
                        expected_payoffs_mc(profile, schedule, shots, row_seed),
                        shots,
                        row_seed});
      }
    }
  }
  return rows;
}

std::vector<double> uniform_angle_grid(int points) {
  if (points < 2) throw std::invalid_argument("deviation grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) grid[static_cast<std::size_t>(k)] = kPi * k / (points - 1);
  grid.back() = kPi;
  return grid;
}

EquilibriumReport certify_nash(const StrategyProfile& profile, const PayoffSchedule& schedule,
                               std::span<const std::vector<double>> candidates, double tol) {
  if (candidates.size() != profile.rounds()) {
    throw std::invalid_argument("need one candidate list per round");
  }
  std::size_t widest = 0;
  for (const auto& values : candidates) {
    if (values.empty()) throw std::invalid_argument("empty deviation candidate list");
    widest = std::max(widest, values.size());
  }
  EquilibriumReport report{profile, false, {}, static_cast<int>(widest)};
  report.best_deviation_gain = {best_gain(profile, schedule, candidates, 1),
                                best_gain(profile, schedule, candidates, 2)};
  report.is_nash =
      report.best_deviation_gain.player1 <= tol && report.best_deviation_gain.player2 <= tol;
  return report;
}

EquilibriumReport certify_nash(const StrategyProfile& profile, const PayoffSchedule& schedule,
                               int grid_points, double tol) {
  const std::vector<std::vector<double>> candidates(profile.rounds(),
                                                    uniform_angle_grid(grid_points));
  return certify_nash(profile, schedule, candidates, tol);
}

double GradientVector::max_abs() const {
  double m = 0.0;
  for (double v : as_array()) m = std::max(m, std::abs(v));
  return m;
}

double GradientVector::max_abs_diff(const GradientVector& other) const {
  const auto a = as_array();
  const auto b = other.as_array();
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

GradientVector payoff_gradient_analytic(std::span<const double, 3> thetas) {
  const double c1 = std::cos(thetas[0] / 2.0), s1 = std::sin(thetas[0] / 2.0);
  const double c2 = std::cos(thetas[1] / 2.0), s2 = std::sin(thetas[1] / 2.0);
  const double c3 = std::cos(thetas[2] / 2.0), s3 = std::sin(thetas[2] / 2.0);

  GradientVector g;
  g.d1_dtheta1 = 2.0 * c1 * s1 * (-c2 * c2 * c3 * c3 + s2 * s2 * s3 * s3);
  g.d1_dtheta2 = -c2 * s2 * std::cos(thetas[0]);
  g.d1_dtheta3 = c3 * s3 *
                 (c2 * c2 - s2 * s2 - 2.0 * c1 * c1 * c2 * c2 + 2.0 * s1 * s1 * s2 * s2);
  // $2 does not depend on theta1 at all.
  g.d2_dtheta1 = 0.0;
  g.d2_dtheta2 = -2.0 * c2 * s2 * std::cos(thetas[2]);
  g.d2_dtheta3 = -2.0 * c3 * s3 * std::cos(thetas[1]);
  return g;
}

GradientVector payoff_gradient_analytic(const StrategyProfile& profile) {
  if (profile.rounds() != 3) throw std::invalid_argument("analytic gradient is for 3 rounds");
  return payoff_gradient_analytic(profile.thetas().first<3>());
}

GradientVector payoff_gradient_fd(std::span<const double, 3> thetas, double h,
                                  const PayoffSchedule& schedule) {
  if (!(h > 0.0 && h <= 1e-3)) throw std::invalid_argument("step must satisfy 0 < h <= 1e-3");

  std::array<PayoffPair, 3> slope{};
  for (std::size_t k = 0; k < 3; ++k) {
    std::array<double, 3> plus{thetas[0], thetas[1], thetas[2]};
    std::array<double, 3> minus = plus;
    plus[k] += h;
    minus[k] -= h;
    const PayoffPair up = expected_payoffs_exact(std::span<const double>(plus), schedule);
    const PayoffPair down = expected_payoffs_exact(std::span<const double>(minus), schedule);
    slope[k] = {(up.player1 - down.player1) / (2.0 * h), (up.player2 - down.player2) / (2.0 * h)};
  }
  return {slope[0].player1, slope[1].player1, slope[2].player1,
          slope[0].player2, slope[1].player2, slope[2].player2};
}

}  // namespace qcentipede
