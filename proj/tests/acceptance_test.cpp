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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qcentipede/conjecture_lab.hpp"
#include "qcentipede/ctz_protocol.hpp"
#include "qcentipede/equilibrium.hpp"
#include "qcentipede/game_model.hpp"
#include "qcentipede/report_io.hpp"

namespace {

using namespace qcentipede;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) detail << what;
    ok = ok && condition;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<double> random_thetas(std::mt19937_64& gen, int n) {
  std::uniform_real_distribution<double> angle(0.0, kPi);
  std::vector<double> t(static_cast<std::size_t>(n));
  for (double& x : t) x = angle(gen);
  return t;
}

// Reference Monte Carlo payoffs for the 18 grid profiles, in sweep order.
constexpr std::array<std::array<double, 2>, 18> kReference{{
    {2.0, 2.0}, {0.0, 2.0}, {0.96, 2.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0},
    {1.51, 1.02}, {0.54, 0.92}, {0.92, 0.96}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0},
    {0.0, 2.0}, {2.0, 2.0}, {1.08, 2.0}, {0.44, 1.12}, {1.56, 1.12}, {1.05, 1.14},
}};

void ac1(Check& c) {
  const auto start = Clock::now();
  const std::string command = std::string(QCENTIPEDE_CLI) + " table1 --shots 1000";
  FILE* pipe = popen(command.c_str(), "r");
  c.expect(pipe != nullptr, "could not start CLI");
  if (pipe == nullptr) return;
  std::string text;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
  const int status = pclose(pipe);
  const double elapsed = seconds_since(start);
  c.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "CLI exited abnormally");

  std::istringstream in(text);
  const auto rows = io::read_table1_csv(in);
  c.expect(rows.size() == 18, "expected 18 rows");
  if (rows.size() != 18) return;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto ref = oracle::simplified_payoffs(r.thetas[0], r.thetas[1], r.thetas[2]);
    const double mc1 = std::abs(r.mc_payoffs.player1 - kReference[i][0]);
    const double mc2 = std::abs(r.mc_payoffs.player2 - kReference[i][1]);
    std::ostringstream where;
    where << "row " << i << " mc=(" << r.mc_payoffs.player1 << ", " << r.mc_payoffs.player2
          << ") reference=(" << kReference[i][0] << ", " << kReference[i][1] << ")";
    c.expect(mc1 <= 0.2 + 1e-12 && mc2 <= 0.2 + 1e-12, where.str());
    c.expect(std::abs(r.exact_payoffs.player1 - ref.p1) <= 1e-9 &&
                 std::abs(r.exact_payoffs.player2 - ref.p2) <= 1e-9,
             "exact payoff mismatch at row " + std::to_string(i));
  }
  c.expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
  c.detail << (c.ok ? "" : "; ") << "runtime " << elapsed << " s";
}

void ac2(Check& c) {
  const auto schedule = PayoffSchedule::centipede3();
  for (const auto& p : {StrategyProfile({0, 0, 0}), StrategyProfile({kPi, kPi, kPi})}) {
    const auto e = expected_payoffs_exact(p, schedule);
    c.expect(std::abs(e.player1 - 2.0) <= 1e-12 && std::abs(e.player2 - 2.0) <= 1e-12,
             "boxed payoff differs from (2, 2)");
  }
}

void ac3(Check& c) {
  std::mt19937_64 gen(2024);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    worst = std::max(worst, last_round_defect_probability(StrategyProfile(random_thetas(gen, 3))));
  }
  c.expect(worst < 1e-12, "max last-round defection " + std::to_string(worst));
  c.detail << (c.ok ? "" : "; ") << "max " << worst;
}

void ac4(Check& c) {
  const auto zero = run_protocol(StrategyProfile({0, 0, 0}));
  const auto pis = run_protocol(StrategyProfile({kPi, kPi, kPi}));
  for (std::size_t i = 0; i < 8; ++i) {
    const Amplitude want_zero = i == 0 ? Amplitude(1, 0) : Amplitude(0, 0);
    const Amplitude want_pi = i == 0 ? Amplitude(0, 1) : Amplitude(0, 0);
    c.expect(std::abs(zero[i].real() - want_zero.real()) <= 1e-12 &&
                 std::abs(zero[i].imag() - want_zero.imag()) <= 1e-12,
             "state at (0,0,0) is not |000>");
    c.expect(std::abs(pis[i].real() - want_pi.real()) <= 1e-12 &&
                 std::abs(pis[i].imag() - want_pi.imag()) <= 1e-12,
             "state at (pi,pi,pi) is not i|000>");
  }
  c.expect(equal_up_to_global_phase(zero, pis, 1e-12), "corner states differ beyond a phase");
}

void ac5(Check& c) {
  for (int n = 2; n <= 5; ++n) {
    const auto reference = oracle::entangler(n);
    const std::size_t dim = std::size_t{1} << n;
    const auto circuit = entangler_gate_circuit(n);
    std::optional<Amplitude> common;
    for (std::size_t in = 0; in < dim; ++in) {
      StateVector s = StateVector::from_amplitudes(oracle::basis(dim, in));
      apply_gates(s, circuit);
      const auto want = oracle::apply(reference, oracle::basis(dim, in));
      const auto expected = StateVector::from_amplitudes(want);
      const auto phase = fit_global_phase(s, expected, 1e-12);
      c.expect(phase.has_value(), "circuit column " + std::to_string(in) + " differs, n=" +
                                      std::to_string(n));
      if (!phase) continue;
      if (!common) common = phase;
      c.expect(std::abs(*phase - *common) <= 1e-12,
               "phase not common across inputs, n=" + std::to_string(n));
    }
    for (std::size_t in = 0; in < dim; ++in) {
      StateVector s = StateVector::from_amplitudes(oracle::basis(dim, in));
      apply_entangler(s);
      apply_disentangler(s);
      const auto id = StateVector::from_amplitudes(oracle::basis(dim, in));
      c.expect(s.max_abs_diff(id) <= 1e-12, "J then J-dagger is not identity");
    }
  }
}

void ac6(Check& c) {
  std::mt19937_64 gen(6);
  double worst = 0.0;
  double odd = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto t = random_thetas(gen, 3);
    const auto cf = closed_form_amplitudes(t[0], t[1], t[2]);
    const auto sim = run_protocol(t, EntanglerBackend::kMatrix);
    for (std::size_t k = 0; k < 8; ++k) {
      worst = std::max(worst, std::abs(cf[k] - sim[k]));
      if (std::popcount(k) % 2 == 1) odd = std::max(odd, std::abs(sim[k]));
    }
  }
  c.expect(worst <= 1e-12, "closed form differs by " + std::to_string(worst));
  c.expect(odd <= 1e-12, "odd-parity amplitude " + std::to_string(odd));
}

void ac7(Check& c) {
  std::mt19937_64 gen(7);
  double worst = 0.0;
  double d21 = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto v = random_thetas(gen, 3);
    const std::array<double, 3> t{v[0], v[1], v[2]};
    const auto a = payoff_gradient_analytic(t);
    const auto fd = payoff_gradient_fd(t, 1e-5);
    worst = std::max(worst, a.max_abs_diff(fd));
    d21 = std::max({d21, std::abs(a.d2_dtheta1), std::abs(fd.d2_dtheta1)});
  }
  c.expect(worst <= 1e-6, "analytic vs FD " + std::to_string(worst));
  c.expect(d21 <= 1e-10, "d2/dtheta1 nonzero " + std::to_string(d21));
  c.expect(payoff_gradient_analytic(StrategyProfile({0, 0, 0})).max_abs() <= 1e-12,
           "gradient nonzero at (0,0,0)");
  c.expect(payoff_gradient_analytic(StrategyProfile({kPi, kPi, kPi})).max_abs() <= 1e-12,
           "gradient nonzero at (pi,pi,pi)");
  c.detail << (c.ok ? "" : "; ") << "max discrepancy " << worst;
}

void ac8(Check& c) {
  const auto schedule = PayoffSchedule::centipede3();
  for (const auto& p : {StrategyProfile({0, 0, 0}), StrategyProfile({kPi, kPi, kPi})}) {
    const auto r = certify_nash(p, schedule, 25, 1e-9);
    c.expect(r.is_nash && r.best_deviation_gain.player1 <= 1e-9 &&
                 r.best_deviation_gain.player2 <= 1e-9,
             "boxed profile not certified");
  }
  const auto bad = certify_nash(StrategyProfile({0, kPi / 2, 0}), schedule, 25, 1e-9);
  c.expect(!bad.is_nash &&
               std::max(bad.best_deviation_gain.player1, bad.best_deviation_gain.player2) > 0.0,
           "(0, pi/2, 0) not rejected");
}

void ac9(Check& c) {
  const auto r = backward_induction(PayoffSchedule::centipede3());
  c.expect(r.defection_round == 1, "defection round is not 1");
  c.expect(r.payoffs == PayoffPair{1, 0}, "payoffs are not (1, 0)");
}

void ac10(Check& c) {
  const auto start = Clock::now();
  for (int n = 2; n <= 7; ++n) {
    const auto r = evaluate_conjecture(n, 1000, 42);
    const std::string tag = "n=" + std::to_string(n);
    if (n % 2 == 1) {
      c.expect(r.collapse_holds && r.max_last_round_defect_prob < 1e-12,
               tag + " collapse fails");
    } else if (n <= 6) {
      c.expect(r.witness.has_value(), tag + " has no witness");
      if (!r.witness) continue;
      const auto w = r.witness->thetas();
      const double p = oracle::last_round_defect_probability({w.begin(), w.end()});
      c.expect(p >= 0.2, tag + " witness probability " + std::to_string(p));
      c.expect(std::abs(p - r.max_last_round_defect_prob) <= 1e-12,
               tag + " witness disagrees with oracle");
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
  c.detail << (c.ok ? "" : "; ") << "runtime " << elapsed << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"AC1  table sweep reproduction", ac1},
      {"AC2  boxed equilibrium payoffs", ac2},
      {"AC3  three-round last-move collapse", ac3},
      {"AC4  corner states", ac4},
      {"AC5  entangler decomposition", ac5},
      {"AC6  closed form vs simulator", ac6},
      {"AC7  gradient validation", ac7},
      {"AC8  Nash certification", ac8},
      {"AC9  classical backward induction", ac9},
      {"AC10 conjecture parity", ac10},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    failures += c.ok ? 0 : 1;
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << name;
    const std::string d = c.detail.str();
    if (!d.empty()) std::cout << " (" << d << ")";
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
