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

// qcentipede: batch front end for the quantum centipede experiments.
//
//   qcentipede table1     [--shots N] [--seed S] [--schedule F] [-o OUT] [--format csv|json]
//   qcentipede simulate   --angles a,b,c [--shots N] [--seed S] [--schedule F] [-o OUT]
//   qcentipede nash       [--angles a,b,c] [--grid G] [--schedule F] [-o OUT]
//   qcentipede grad-check [--samples K] [--seed S] [--angles a,b,c] [-o OUT]
//   qcentipede conjecture [--n MIN:MAX] [--samples K] [--seed S] [-o OUT] [--format csv|json]
//
// Exit codes: 0 report written, 2 usage or configuration error, 3 internal
// invariant violation.

#include <CLI11.hpp>

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcentipede/conjecture_lab.hpp"
#include "qcentipede/ctz_protocol.hpp"
#include "qcentipede/equilibrium.hpp"
#include "qcentipede/errors.hpp"
#include "qcentipede/game_model.hpp"
#include "qcentipede/report_io.hpp"
#include "qcentipede/rng.hpp"

namespace {

using namespace qcentipede;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

constexpr double kNashTolerance = 1e-9;
constexpr double kGradientStep = 1e-5;
constexpr double kGradientTolerance = 1e-6;

// Bad user input that should map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string schedule_path;
  std::uint64_t shots = 1000;
  std::uint64_t seed = 42;
  std::string output_path;
  std::string format = "csv";
  std::string angles;
  std::string n_range = "2:8";
  int samples = 1000;
  int grid = 25;
};

PayoffSchedule load_schedule(const RunConfig& config) {
  if (config.schedule_path.empty()) return PayoffSchedule::centipede3();
  try {
    return PayoffSchedule::load(config.schedule_path);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

StrategyProfile profile_from_angles(const std::string& text, const PayoffSchedule& schedule) {
  try {
    std::vector<double> thetas = io::parse_angle_list(text);
    if (static_cast<int>(thetas.size()) != schedule.rounds()) {
      throw UsageError("got " + std::to_string(thetas.size()) + " angles for a " +
                       std::to_string(schedule.rounds()) + "-round schedule");
    }
    return StrategyProfile(std::move(thetas));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

io::ReportHeader make_header(const std::string& command, const RunConfig& config,
                             const PayoffSchedule& schedule) {
  io::ReportHeader h;
  h.command = command;
  h.schedule_hash = io::schedule_hash(schedule);
  h.seed = config.seed;
  h.shots = config.shots;
  return h;
}

// The report is rendered completely before the destination is touched, so a
// failed run never leaves a partial file behind.
void emit(const RunConfig& config, const std::string& report) {
  if (config.output_path.empty()) {
    std::cout << report << std::flush;
    if (!std::cout) throw UsageError("failed writing report to stdout");
    return;
  }
  std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot open output file '" + config.output_path + "'");
  out << report;
  out.close();
  if (!out) throw UsageError("failed writing output file '" + config.output_path + "'");
}

std::string json_text(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

void require_json_format(const RunConfig& config, const std::string& command) {
  if (config.format != "json") {
    throw UsageError(command + " only writes JSON reports (use --format json)");
  }
}

int cmd_table1(const RunConfig& config) {
  const PayoffSchedule schedule = load_schedule(config);
  if (schedule.rounds() != 3) throw UsageError("table1 needs a 3-round schedule");
  const std::vector<SweepRow> rows = sweep_table1(config.shots, config.seed, schedule);
  const io::ReportHeader header = make_header("table1", config, schedule);

  if (config.format == "json") {
    nlohmann::json doc{{"header", io::to_json(header)}, {"rows", nlohmann::json::array()}};
    for (const auto& row : rows) doc["rows"].push_back(io::to_json(row));
    emit(config, json_text(doc));
  } else {
    std::ostringstream out;
    io::write_table1_csv(out, header, rows);
    emit(config, out.str());
  }
  return kExitOk;
}

int cmd_simulate(const RunConfig& config) {
  const PayoffSchedule schedule = load_schedule(config);
  if (config.angles.empty()) throw UsageError("simulate needs --angles");
  const StrategyProfile profile = profile_from_angles(config.angles, schedule);

  const StateVector state = run_protocol(profile);
  const OutcomeProbabilities probs = outcome_probabilities(state);
  const PayoffPair exact = expected_payoffs_exact(profile, schedule);
  const PayoffPair mc = expected_payoffs_mc(profile, schedule, config.shots, config.seed);

  std::ostringstream text;
  text << "state: " << io::format_ket(state) << '\n';
  text << "probabilities:\n";
  for (std::size_t r = 0; r < probs.p_defect_round.size(); ++r) {
    text << "  " << io::outcome_label(Outcome::defect_at(static_cast<int>(r) + 1)) << ": "
         << io::format_real(probs.p_defect_round[r]) << '\n';
  }
  text << "  " << io::outcome_label(Outcome::full_cooperation()) << ": "
       << io::format_real(probs.p_full_cooperation) << '\n';
  text << "exact payoffs: (" << io::format_real(exact.player1) << ", "
       << io::format_real(exact.player2) << ")\n";
  text << "mc payoffs (" << config.shots << " shots, seed " << config.seed << "): ("
       << io::format_real(mc.player1) << ", " << io::format_real(mc.player2) << ")\n";

  if (config.output_path.empty()) {
    emit(config, text.str());
    return kExitOk;
  }
  require_json_format(config, "simulate");
  nlohmann::json amplitudes = nlohmann::json::object();
  for (std::size_t i = 0; i < state.size(); ++i) {
    amplitudes[to_bitstring(i, state.num_qubits())] = {state[i].real(), state[i].imag()};
  }
  nlohmann::json outcome_probs = nlohmann::json::object();
  for (std::size_t r = 0; r < probs.p_defect_round.size(); ++r) {
    outcome_probs[io::outcome_label(Outcome::defect_at(static_cast<int>(r) + 1))] =
        probs.p_defect_round[r];
  }
  outcome_probs[io::outcome_label(Outcome::full_cooperation())] = probs.p_full_cooperation;

  const nlohmann::json doc{
      {"header", io::to_json(make_header("simulate", config, schedule))},
      {"thetas", std::vector<double>(profile.thetas().begin(), profile.thetas().end())},
      {"state", io::format_ket(state)},
      {"amplitudes", amplitudes},
      {"probabilities", outcome_probs},
      {"exact", {exact.player1, exact.player2}},
      {"mc", {mc.player1, mc.player2}}};
  std::cout << text.str();
  emit(config, json_text(doc));
  return kExitOk;
}

int cmd_nash(const RunConfig& config) {
  require_json_format(config, "nash");
  const PayoffSchedule schedule = load_schedule(config);
  if (config.grid < 2) throw UsageError("--grid must be at least 2");

  std::vector<StrategyProfile> profiles;
  if (!config.angles.empty()) {
    profiles.push_back(profile_from_angles(config.angles, schedule));
  } else {
    if (schedule.rounds() != 3) throw UsageError("nash without --angles needs a 3-round schedule");
    for (double t3 : table1_round_values(3))
      for (double t2 : table1_round_values(2))
        for (double t1 : table1_round_values(1)) profiles.emplace_back(std::vector{t1, t2, t3});
  }

  nlohmann::json reports = nlohmann::json::array();
  for (const auto& profile : profiles) {
    reports.push_back(io::to_json(certify_nash(profile, schedule, config.grid, kNashTolerance)));
  }
  const nlohmann::json doc{{"header", io::to_json(make_header("nash", config, schedule))},
                           {"tolerance", kNashTolerance},
                           {"reports", reports}};
  emit(config, json_text(doc));
  return kExitOk;
}

int cmd_grad_check(const RunConfig& config) {
  require_json_format(config, "grad-check");
  if (config.samples < 1) throw UsageError("--samples must be at least 1");
  const PayoffSchedule schedule = PayoffSchedule::centipede3();

  std::vector<std::array<double, 3>> points;
  if (!config.angles.empty()) {
    const StrategyProfile p = profile_from_angles(config.angles, schedule);
    points.push_back({p.theta(0), p.theta(1), p.theta(2)});
  } else {
    Rng rng(config.seed);
    for (int s = 0; s < config.samples; ++s) {
      points.push_back({rng.uniform(0.0, std::numbers::pi), rng.uniform(0.0, std::numbers::pi),
                        rng.uniform(0.0, std::numbers::pi)});
    }
  }

  double worst = 0.0;
  std::array<double, 3> worst_point = points.front();
  GradientVector worst_analytic;
  GradientVector worst_fd;
  for (const auto& pt : points) {
    const GradientVector analytic = payoff_gradient_analytic(pt);
    const GradientVector fd = payoff_gradient_fd(pt, kGradientStep, schedule);
    const double diff = analytic.max_abs_diff(fd);
    if (diff >= worst) {
      worst = diff;
      worst_point = pt;
      worst_analytic = analytic;
      worst_fd = fd;
    }
  }

  const nlohmann::json doc{{"header", io::to_json(make_header("grad-check", config, schedule))},
                           {"points", points.size()},
                           {"step", kGradientStep},
                           {"tolerance", kGradientTolerance},
                           {"max_abs_discrepancy", worst},
                           {"within_tolerance", worst < kGradientTolerance},
                           {"worst_point", worst_point},
                           {"analytic", io::to_json(worst_analytic)},
                           {"finite_difference", io::to_json(worst_fd)}};
  emit(config, json_text(doc));
  return kExitOk;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("bad --n '" + text + "' (expected N or MIN:MAX)");
  }
}

int cmd_conjecture(const RunConfig& config) {
  const auto [n_min, n_max] = parse_n_range(config.n_range);
  if (n_min < 2 || n_min > n_max || n_max > kConjectureMaxRounds) {
    throw UsageError("--n must satisfy 2 <= MIN <= MAX <= " +
                     std::to_string(kConjectureMaxRounds));
  }
  if (config.samples < 1) throw UsageError("--samples must be at least 1");

  const std::vector<ConjectureReport> reports =
      conjecture_sweep(n_min, n_max, config.samples, config.seed);
  // Collapse and corner checks are payoff-independent; the header still
  // names the schedule for uniformity.
  io::ReportHeader header = make_header("conjecture", config, PayoffSchedule::centipede3());
  header.shots = 0;

  if (config.format == "csv") {
    std::ostringstream out;
    io::write_conjecture_csv(out, header, reports);
    emit(config, out.str());
  } else {
    nlohmann::json doc{{"header", io::to_json(header)},
                       {"tolerance", kConjectureTolerance},
                       {"reports", nlohmann::json::array()}};
    for (const auto& r : reports) doc["reports"].push_back(io::to_json(r));
    emit(config, json_text(doc));
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, RunConfig& config, bool with_format_default_json) {
  cmd->add_option("-o,--output", config.output_path, "Report file (default: stdout)");
  cmd->add_option("--format", config.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_str(with_format_default_json ? "json" : "csv");
  cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum centipede game laboratory"};
  app.require_subcommand(1);
  RunConfig config;

  auto* table1 = app.add_subcommand("table1", "Sweep the 18-profile strategy grid");
  add_common(table1, config, false);
  table1->add_option("--shots", config.shots, "Monte Carlo shots per row")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  table1->add_option("--schedule", config.schedule_path, "Payoff schedule JSON");

  auto* simulate = app.add_subcommand("simulate", "Run one strategy profile");
  add_common(simulate, config, true);
  simulate->add_option("--angles", config.angles, "Comma-separated thetas")->required();
  simulate->add_option("--shots", config.shots, "Monte Carlo shots")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--schedule", config.schedule_path, "Payoff schedule JSON");

  auto* nash = app.add_subcommand("nash", "Certify Nash equilibria by deviation search");
  add_common(nash, config, true);
  nash->add_option("--angles", config.angles, "Profile to certify (default: the 18-point grid)");
  nash->add_option("--grid", config.grid, "Deviation grid points per angle")
      ->capture_default_str();
  nash->add_option("--schedule", config.schedule_path, "Payoff schedule JSON");

  auto* grad = app.add_subcommand("grad-check", "Compare analytic and finite-difference gradients");
  add_common(grad, config, true);
  grad->add_option("--samples", config.samples, "Random profiles")->capture_default_str();
  grad->add_option("--angles", config.angles, "Check a single profile instead");

  auto* conjecture = app.add_subcommand("conjecture", "Test the n-round collapse and corner claims");
  add_common(conjecture, config, true);
  conjecture->add_option("--n", config.n_range, "Round count N or range MIN:MAX")
      ->capture_default_str();
  conjecture->add_option("--samples", config.samples, "Random profiles per round count")
      ->capture_default_str();

  // Per-command format defaults; an explicit --format overrides them.
  for (auto* cmd : {simulate, nash, grad, conjecture}) {
    cmd->preparse_callback([&config](std::size_t) { config.format = "json"; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (table1->parsed()) return cmd_table1(config);
    if (simulate->parsed()) return cmd_simulate(config);
    if (nash->parsed()) return cmd_nash(config);
    if (grad->parsed()) return cmd_grad_check(config);
    if (conjecture->parsed()) return cmd_conjecture(config);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
