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

#ifndef QCENTIPEDE_REPORT_IO_HPP_
#define QCENTIPEDE_REPORT_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcentipede/conjecture_lab.hpp"
#include "qcentipede/equilibrium.hpp"
#include "qcentipede/game_model.hpp"
#include "qcentipede/state_vector.hpp"

namespace qcentipede::io {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Accepts the symbolic tokens 0, pi, pi/2, pi/4 and plain decimal radians.
// Throws std::invalid_argument on anything else.
double parse_angle(std::string_view token);
// Comma-separated list of angle tokens, e.g. "pi,pi/2,0".
std::vector<double> parse_angle_list(std::string_view text);

// Shortest "%.12g" rendering; used for every real number in CSV output.
std::string format_real(double value);

// FNV-1a (64-bit) of the schedule's compact JSON dump, as 16 hex digits.
std::string schedule_hash(const PayoffSchedule& schedule);

// Provenance block carried by every report.
struct ReportHeader {
  std::string command;
  std::string schedule_hash;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::string tool_version{kToolVersion};
};

nlohmann::json to_json(const ReportHeader& header);
nlohmann::json to_json(const SweepRow& row);
nlohmann::json to_json(const EquilibriumReport& report);
nlohmann::json to_json(const GradientVector& gradient);
// {"rounds", "samples", "max_last_round_defect_prob", "collapse_holds",
//  "corner_degenerate", "witness"} plus the fitted "corner_phase" as [re, im].
nlohmann::json to_json(const ConjectureReport& report);

// Header block as '#' comment lines, then the column row
// theta1,theta2,theta3,exact_p1,exact_p2,mc_p1,mc_p2,shots,seed
// and one line per row.
void write_table1_csv(std::ostream& out, const ReportHeader& header,
                      std::span<const SweepRow> rows);
// Inverse of write_table1_csv; '#' lines are skipped and angle cells may use
// the symbolic tokens. Throws std::invalid_argument on malformed input.
std::vector<SweepRow> read_table1_csv(std::istream& in);

void write_conjecture_csv(std::ostream& out, const ReportHeader& header,
                          std::span<const ConjectureReport> reports);

// "DefectAt(2)" or "FullCooperation".
std::string outcome_label(const Outcome& outcome);

// Non-negligible terms in ket notation, e.g. "0.707106781187|000> + 0.707106781187i|011>";
// unit coefficients are elided, so i|000> prints as "i|000>".
std::string format_ket(const StateVector& state, double tol = 1e-12);

}  // namespace qcentipede::io

#endif  // QCENTIPEDE_REPORT_IO_HPP_
