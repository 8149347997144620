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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "qcentipede/game_model.hpp"

namespace qcentipede {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;

TEST(Classify, FirstDefectionEndsTheGame) {
  EXPECT_EQ(classify("000", 3), Outcome::full_cooperation());
  EXPECT_EQ(classify("011", 3), Outcome::defect_at(2));
  EXPECT_EQ(classify("110", 3), Outcome::defect_at(1));
  EXPECT_EQ(classify("010", 3), Outcome::defect_at(2));
  EXPECT_EQ(classify("001", 3), Outcome::defect_at(3));
  EXPECT_THROW(classify("01", 3), std::invalid_argument);
  EXPECT_THROW(classify("0a1", 3), std::invalid_argument);
}

TEST(Classify, IndexAndStringFormsAgree) {
  for (int n = 1; n <= 6; ++n) {
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
      EXPECT_EQ(classify_index(i, n), classify(to_bitstring(i, n), n));
    }
  }
}

TEST(Payoff, DefaultSchedule) {
  const auto schedule = PayoffSchedule::centipede3();
  EXPECT_EQ(payoff(Outcome::defect_at(1), schedule), (PayoffPair{1, 0}));
  EXPECT_EQ(payoff(Outcome::defect_at(2), schedule), (PayoffPair{0, 2}));
  EXPECT_EQ(payoff(Outcome::defect_at(3), schedule), (PayoffPair{3, 1}));
  EXPECT_EQ(payoff(Outcome::full_cooperation(), schedule), (PayoffPair{2, 2}));
  EXPECT_THROW(payoff(Outcome::defect_at(4), schedule), std::out_of_range);
}

TEST(Schedule, JsonRoundTripAndExactFieldNames) {
  const auto schedule = PayoffSchedule::centipede3();
  EXPECT_EQ(schedule.to_json(), nlohmann::json::parse(
                                    R"({"rounds": 3, "defect": [[1,0],[0,2],[3,1]], "cooperate": [2,2]})"));
  const auto back = PayoffSchedule::from_json(schedule.to_json());
  EXPECT_EQ(back.defect, schedule.defect);
  EXPECT_EQ(back.cooperate, schedule.cooperate);
}

TEST(Schedule, RejectsMalformedDocuments) {
  const auto bad = [](const char* text) {
    EXPECT_THROW(PayoffSchedule::from_json(nlohmann::json::parse(text)), std::invalid_argument)
        << text;
  };
  bad(R"({"rounds": 3, "defect": [[1,0],[0,2]], "cooperate": [2,2]})");
  bad(R"({"rounds": 1, "defect": [[1,0]], "cooperate": [2,2]})");
  bad(R"({"rounds": 2, "defect": [[1,0],[0]], "cooperate": [2,2]})");
  bad(R"({"rounds": 2, "defect": [[1,0],[0,2]]})");
  bad(R"({"rounds": "2", "defect": [[1,0],[0,2]], "cooperate": [2,2]})");
  bad(R"([1, 2])");
}

TEST(Schedule, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "qcentipede_schedule_test.json";
  {
    std::ofstream out(path);
    out << R"({"rounds": 2, "defect": [[1,0],[0,2]], "cooperate": [2,2]})";
  }
  const auto s = PayoffSchedule::load(path);
  EXPECT_EQ(s.rounds(), 2);
  std::filesystem::remove(path);
  EXPECT_THROW(PayoffSchedule::load(path), std::invalid_argument);
}

TEST(ExpectedPayoffs, ExactExamples) {
  const auto schedule = PayoffSchedule::centipede3();
  const auto cc = expected_payoffs_exact(StrategyProfile({0, 0, 0}), schedule);
  EXPECT_NEAR(cc.player1, 2.0, kTol);
  EXPECT_NEAR(cc.player2, 2.0, kTol);

  const auto half = expected_payoffs_exact(StrategyProfile({kPi / 2, 0, 0}), schedule);
  EXPECT_NEAR(half.player1, 1.0, kTol);
  EXPECT_NEAR(half.player2, 2.0, kTol);

  const auto quarter = expected_payoffs_exact(StrategyProfile({kPi / 2, kPi / 2, 0}), schedule);
  EXPECT_NEAR(quarter.player1, 1.0, kTol);
  EXPECT_NEAR(quarter.player2, 1.0, kTol);

  EXPECT_THROW(expected_payoffs_exact(StrategyProfile({0, 0}), schedule), std::invalid_argument);
}

TEST(ExpectedPayoffs, MatchesBruteForceSumOverBitstrings) {
  const auto schedule = PayoffSchedule::centipede3();
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<double> t{angle(gen), angle(gen), angle(gen)};
    const auto amps = oracle::protocol_state(t);
    double p1 = 0, p2 = 0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      const auto pay = payoff(classify(to_bitstring(i, 3), 3), schedule);
      p1 += std::norm(amps[i]) * pay.player1;
      p2 += std::norm(amps[i]) * pay.player2;
    }
    const auto got = expected_payoffs_exact(StrategyProfile(t), schedule);
    EXPECT_NEAR(got.player1, p1, kTol);
    EXPECT_NEAR(got.player2, p2, kTol);
  }
}

TEST(ExpectedPayoffs, MatchesSimplifiedClosedForms) {
  const auto schedule = PayoffSchedule::centipede3();
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int trial = 0; trial < 1000; ++trial) {
    const double t1 = angle(gen), t2 = angle(gen), t3 = angle(gen);
    const auto expected = oracle::simplified_payoffs(t1, t2, t3);
    const auto got = expected_payoffs_exact(StrategyProfile({t1, t2, t3}), schedule);
    EXPECT_NEAR(got.player1, expected.p1, kTol);
    EXPECT_NEAR(got.player2, expected.p2, kTol);

    const auto probs = outcome_probabilities_closed_form(t1, t2, t3);
    EXPECT_NEAR(got.player1, probs.p_defect_round[0] + 2 * probs.p_full_cooperation, kTol);
    EXPECT_NEAR(got.player2, 2 * probs.p_defect_round[1] + 2 * probs.p_full_cooperation, kTol);
  }
}

TEST(ExpectedPayoffs, MonteCarloExamples) {
  const auto schedule = PayoffSchedule::centipede3();
  const auto cc = expected_payoffs_mc(StrategyProfile({0, 0, 0}), schedule, 1000, 42);
  EXPECT_EQ(cc, (PayoffPair{2.0, 2.0}));

  const auto half = expected_payoffs_mc(StrategyProfile({kPi / 2, 0, 0}), schedule, 1000, 42);
  EXPECT_NEAR(half.player1, 1.0, 0.2);
  EXPECT_NEAR(half.player2, 2.0, 0.2);

  const auto split = expected_payoffs_mc(StrategyProfile({kPi, kPi / 2, kPi}), schedule, 1000, 42);
  EXPECT_NEAR(split.player1, 1.5, 0.2);
  EXPECT_NEAR(split.player2, 1.0, 0.2);

  EXPECT_EQ(expected_payoffs_mc(StrategyProfile({kPi / 2, kPi / 2, 0}), schedule, 500, 3),
            expected_payoffs_mc(StrategyProfile({kPi / 2, kPi / 2, 0}), schedule, 500, 3));
  EXPECT_THROW(expected_payoffs_mc(StrategyProfile({0, 0, 0}), schedule, 0, 1),
               std::invalid_argument);
}

TEST(ExpectedPayoffs, MonteCarloWithinFiveSigmaOfExact) {
  const auto schedule = PayoffSchedule::centipede3();
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  constexpr std::uint64_t kShots = 20000;
  for (int trial = 0; trial < 30; ++trial) {
    const StrategyProfile p({angle(gen), angle(gen), angle(gen)});
    const auto moments = payoff_moments(run_protocol(p), schedule);
    const auto mc = expected_payoffs_mc(p, schedule, kShots, 1000 + trial);
    EXPECT_LE(std::abs(mc.player1 - moments.mean.player1),
              5 * std::sqrt(moments.variance.player1 / kShots) + 1e-12);
    EXPECT_LE(std::abs(mc.player2 - moments.mean.player2),
              5 * std::sqrt(moments.variance.player2 / kShots) + 1e-12);
  }
}

TEST(OutcomeProbabilities, GroupedMassIsNormalized) {
  std::mt19937_64 gen(41);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int n = 2; n <= 7; ++n) {
    std::vector<double> t(static_cast<std::size_t>(n));
    for (double& x : t) x = angle(gen);
    const auto p = outcome_probabilities(run_protocol(StrategyProfile(t)));
    EXPECT_NEAR(p.total(), 1.0, 1e-10);
    for (double v : p.p_defect_round) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0 + 1e-12);
    }
  }
}

TEST(BackwardInduction, DefaultScheduleDefectsImmediately) {
  const auto result = backward_induction(PayoffSchedule::centipede3());
  ASSERT_TRUE(result.defection_round.has_value());
  EXPECT_EQ(*result.defection_round, 1);
  EXPECT_EQ(result.payoffs, (PayoffPair{1, 0}));
}

TEST(BackwardInduction, UnprofitableDefectionMeansCooperation) {
  const PayoffSchedule flat{{{0, 0}, {0, 0}, {0, 0}}, {2, 2}};
  const auto result = backward_induction(flat);
  EXPECT_FALSE(result.defection_round.has_value());
  EXPECT_EQ(result.payoffs, (PayoffPair{2, 2}));
}

TEST(BackwardInduction, TiesCooperate) {
  const PayoffSchedule two{{{1, 0}, {0, 2}}, {2, 2}};
  const auto result = backward_induction(two);
  EXPECT_FALSE(result.defection_round.has_value());
  EXPECT_EQ(result.payoffs, (PayoffPair{2, 2}));
}

TEST(BackwardInduction, LongerLadder) {
  // Classic growing-pot ladder: every mover prefers taking now.
  const PayoffSchedule ladder{{{2, 1}, {1, 4}, {8, 2}, {4, 16}}, {32, 8}};
  const auto result = backward_induction(ladder);
  ASSERT_TRUE(result.defection_round.has_value());
  EXPECT_EQ(*result.defection_round, 1);
  EXPECT_EQ(result.payoffs, (PayoffPair{2, 1}));
}

}  // namespace
}  // namespace qcentipede
