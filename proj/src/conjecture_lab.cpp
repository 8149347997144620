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

#include "qcentipede/conjecture_lab.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcentipede/game_model.hpp"
#include "qcentipede/rng.hpp"

namespace qcentipede {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double last_round_defect_probability(const StrategyProfile& profile) {
  const OutcomeProbabilities p = outcome_probabilities(run_protocol(profile));
  return p.p_defect_round.back();
}

CornerDegeneracy corner_degeneracy_check(int n_rounds, double tol) {
  if (n_rounds < 2) throw std::invalid_argument("corner check needs n >= 2");
  const auto n = static_cast<std::size_t>(n_rounds);
  const StateVector zeros = run_protocol(StrategyProfile(std::vector<double>(n, 0.0)));
  const StateVector pis = run_protocol(StrategyProfile(std::vector<double>(n, kPi)));
  const auto phase = fit_global_phase(pis, zeros, tol);
  return {phase.has_value(), phase};
}

ConjectureReport evaluate_conjecture(int n_rounds, int samples, std::uint64_t seed, double tol) {
  if (n_rounds < 2 || n_rounds > kConjectureMaxRounds) {
    throw std::invalid_argument("round count must be in 2.." +
                                std::to_string(kConjectureMaxRounds));
  }
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  ConjectureReport report;
  report.n_rounds = n_rounds;
  report.samples = samples;

  const auto n = static_cast<std::size_t>(n_rounds);
  std::optional<StrategyProfile> best;
  double best_prob = -1.0;
  const auto consider = [&](std::vector<double> thetas) {
    StrategyProfile profile(std::move(thetas));
    const double p = last_round_defect_probability(profile);
    if (p > best_prob) {
      best_prob = p;
      best = std::move(profile);
    }
  };

  Rng rng(seed + static_cast<std::uint64_t>(n_rounds));
  for (int s = 0; s < samples; ++s) {
    std::vector<double> thetas(n);
    for (double& t : thetas) t = rng.uniform(0.0, kPi);
    consider(std::move(thetas));
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<double> thetas(n);
    for (std::size_t k = 0; k < n; ++k) thetas[k] = ((mask >> (n - 1 - k)) & 1U) ? kPi : 0.0;
    consider(std::move(thetas));
  }

  report.max_last_round_defect_prob = std::clamp(best_prob, 0.0, 1.0);
  report.collapse_holds = report.max_last_round_defect_prob < tol;
  if (!report.collapse_holds) report.witness = best;

  const CornerDegeneracy corners = corner_degeneracy_check(n_rounds, tol);
  report.corner_degenerate = corners.degenerate;
  report.corner_phase = corners.phase;
  return report;
}

std::vector<ConjectureReport> conjecture_sweep(int n_min, int n_max, int samples,
                                               std::uint64_t seed, double tol) {
  if (n_min < 2 || n_min > n_max || n_max > kConjectureMaxRounds) {
    throw std::invalid_argument("round range must satisfy 2 <= min <= max <= " +
                                std::to_string(kConjectureMaxRounds));
  }
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::vector<ConjectureReport> reports;
  for (int n = n_min; n <= n_max; ++n) reports.push_back(evaluate_conjecture(n, samples, seed, tol));
  return reports;
}

}  // namespace qcentipede
