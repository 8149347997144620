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

#include "qcentipede/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcentipede::io {
namespace {

constexpr std::string_view kTable1Columns =
    "theta1,theta2,theta3,exact_p1,exact_p2,mc_p1,mc_p2,shots,seed";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

double parse_real(std::string_view token) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw std::invalid_argument("not a number: '" + std::string(token) + "'");
  }
  return value;
}

std::uint64_t parse_count(std::string_view token) {
  token = trim(token);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("not an unsigned integer: '" + std::string(token) + "'");
  }
  return value;
}

void write_header_block(std::ostream& out, const ReportHeader& header) {
  out << "# tool: qcentipede " << header.tool_version << '\n'
      << "# command: " << header.command << '\n'
      << "# schedule_hash: " << header.schedule_hash << '\n'
      << "# seed: " << header.seed << '\n'
      << "# shots: " << header.shots << '\n';
}

nlohmann::json pair_json(const PayoffPair& p) { return {p.player1, p.player2}; }

std::string coefficient(const Amplitude& a, double tol) {
  const bool real_only = std::abs(a.imag()) <= tol;
  const bool imag_only = std::abs(a.real()) <= tol;
  if (real_only) {
    if (std::abs(a.real() - 1.0) <= tol) return "";
    if (std::abs(a.real() + 1.0) <= tol) return "-";
    return format_real(a.real());
  }
  if (imag_only) {
    if (std::abs(a.imag() - 1.0) <= tol) return "i";
    if (std::abs(a.imag() + 1.0) <= tol) return "-i";
    return format_real(a.imag()) + "i";
  }
  return "(" + format_real(a.real()) + (a.imag() < 0 ? "-" : "+") +
         format_real(std::abs(a.imag())) + "i)";
}

}  // namespace

double parse_angle(std::string_view token) {
  token = trim(token);
  if (token == "0") return 0.0;
  if (token == "pi") return std::numbers::pi;
  if (token == "pi/2") return std::numbers::pi / 2.0;
  if (token == "pi/4") return std::numbers::pi / 4.0;
  try {
    return parse_real(token);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad angle '" + std::string(token) +
                                "' (expected 0, pi, pi/2, pi/4 or radians)");
  }
}

std::vector<double> parse_angle_list(std::string_view text) {
  if (trim(text).empty()) throw std::invalid_argument("empty angle list");
  std::vector<double> angles;
  for (std::string_view token : split(text, ',')) angles.push_back(parse_angle(token));
  return angles;
}

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string schedule_hash(const PayoffSchedule& schedule) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : schedule.to_json().dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json to_json(const ReportHeader& header) {
  return {{"tool", "qcentipede"},
          {"version", header.tool_version},
          {"command", header.command},
          {"schedule_hash", header.schedule_hash},
          {"seed", header.seed},
          {"shots", header.shots}};
}

nlohmann::json to_json(const SweepRow& row) {
  return {{"thetas", row.thetas},
          {"exact", pair_json(row.exact_payoffs)},
          {"mc", pair_json(row.mc_payoffs)},
          {"shots", row.shots},
          {"seed", row.seed}};
}

nlohmann::json to_json(const EquilibriumReport& report) {
  return {{"thetas", std::vector<double>(report.profile.thetas().begin(),
                                         report.profile.thetas().end())},
          {"is_nash", report.is_nash},
          {"best_deviation_gain", pair_json(report.best_deviation_gain)},
          {"deviation_grid_size", report.deviation_grid_size}};
}

nlohmann::json to_json(const GradientVector& g) {
  return {{"d1_dtheta1", g.d1_dtheta1}, {"d1_dtheta2", g.d1_dtheta2},
          {"d1_dtheta3", g.d1_dtheta3}, {"d2_dtheta1", g.d2_dtheta1},
          {"d2_dtheta2", g.d2_dtheta2}, {"d2_dtheta3", g.d2_dtheta3}};
}

nlohmann::json to_json(const ConjectureReport& report) {
  nlohmann::json j{{"rounds", report.n_rounds},
                   {"samples", report.samples},
                   {"max_last_round_defect_prob", report.max_last_round_defect_prob},
                   {"collapse_holds", report.collapse_holds},
                   {"corner_degenerate", report.corner_degenerate},
                   {"witness", nullptr},
                   {"corner_phase", nullptr}};
  if (report.witness) {
    j["witness"] = std::vector<double>(report.witness->thetas().begin(),
                                       report.witness->thetas().end());
  }
  if (report.corner_phase) {
    j["corner_phase"] = {report.corner_phase->real(), report.corner_phase->imag()};
  }
  return j;
}

void write_table1_csv(std::ostream& out, const ReportHeader& header,
                      std::span<const SweepRow> rows) {
  write_header_block(out, header);
  out << kTable1Columns << '\n';
  for (const SweepRow& r : rows) {
    out << format_real(r.thetas[0]) << ',' << format_real(r.thetas[1]) << ','
        << format_real(r.thetas[2]) << ',' << format_real(r.exact_payoffs.player1) << ','
        << format_real(r.exact_payoffs.player2) << ',' << format_real(r.mc_payoffs.player1)
        << ',' << format_real(r.mc_payoffs.player2) << ',' << r.shots << ',' << r.seed << '\n';
  }
}

std::vector<SweepRow> read_table1_csv(std::istream& in) {
  std::vector<SweepRow> rows;
  bool seen_columns = false;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    if (!seen_columns) {
      if (view != kTable1Columns) {
        throw std::invalid_argument("unexpected CSV columns: '" + std::string(view) + "'");
      }
      seen_columns = true;
      continue;
    }
    const auto cells = split(view, ',');
    if (cells.size() != 9) {
      throw std::invalid_argument("expected 9 cells, got " + std::to_string(cells.size()));
    }
    SweepRow row;
    for (std::size_t k = 0; k < 3; ++k) row.thetas[k] = parse_angle(cells[k]);
    row.exact_payoffs = {parse_real(cells[3]), parse_real(cells[4])};
    row.mc_payoffs = {parse_real(cells[5]), parse_real(cells[6])};
    row.shots = parse_count(cells[7]);
    row.seed = parse_count(cells[8]);
    rows.push_back(row);
  }
  if (!seen_columns) throw std::invalid_argument("CSV has no column row");
  return rows;
}

void write_conjecture_csv(std::ostream& out, const ReportHeader& header,
                          std::span<const ConjectureReport> reports) {
  write_header_block(out, header);
  out << "rounds,samples,max_last_round_defect_prob,collapse_holds,corner_degenerate,"
         "corner_phase_re,corner_phase_im,witness\n";
  for (const ConjectureReport& r : reports) {
    out << r.n_rounds << ',' << r.samples << ',' << format_real(r.max_last_round_defect_prob)
        << ',' << (r.collapse_holds ? "true" : "false") << ','
        << (r.corner_degenerate ? "true" : "false") << ',';
    if (r.corner_phase) {
      out << format_real(r.corner_phase->real()) << ',' << format_real(r.corner_phase->imag());
    } else {
      out << ',';
    }
    out << ',';
    if (r.witness) {
      // Space-separated so the witness stays a single cell.
      const auto thetas = r.witness->thetas();
      for (std::size_t k = 0; k < thetas.size(); ++k) {
        out << (k ? " " : "") << format_real(thetas[k]);
      }
    }
    out << '\n';
  }
}

std::string outcome_label(const Outcome& outcome) {
  if (outcome.is_full_cooperation()) return "FullCooperation";
  return "DefectAt(" + std::to_string(outcome.defect_round()) + ")";
}

std::string format_ket(const StateVector& state, double tol) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (std::abs(state[i]) <= tol) continue;
    std::string coeff = coefficient(state[i], tol);
    if (!first) {
      if (!coeff.empty() && coeff.front() == '-') {
        out << " - ";
        coeff.erase(0, 1);
      } else {
        out << " + ";
      }
    }
    out << coeff << '|' << to_bitstring(i, state.num_qubits()) << '>';
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace qcentipede::io
