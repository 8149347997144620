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

#include "qcentipede/ctz_protocol.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qcentipede/errors.hpp"

namespace qcentipede {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCubeSlack = 1e-12;
constexpr double kNormTolerance = 1e-10;
constexpr Amplitude kI{0.0, 1.0};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void apply_backend_entangler(StateVector& state, EntanglerBackend backend, bool dagger) {
  if (backend == EntanglerBackend::kMatrix) {
    dagger ? apply_disentangler(state) : apply_entangler(state);
    return;
  }
  const GateSequence circuit = entangler_gate_circuit(state.num_qubits());
  apply_gates(state, dagger ? adjoint(circuit) : circuit);
}

}  // namespace

StrategyProfile::StrategyProfile(std::vector<double> thetas)
    : StrategyProfile(thetas, std::vector<double>(thetas.size(), 0.0)) {}

StrategyProfile::StrategyProfile(std::vector<double> thetas, std::vector<double> phis)
    : thetas_(std::move(thetas)), phis_(std::move(phis)) {
  if (thetas_.empty()) throw std::invalid_argument("strategy profile needs at least one round");
  if (thetas_.size() != phis_.size()) {
    throw std::invalid_argument("theta/phi length mismatch: " + std::to_string(thetas_.size()) +
                                " vs " + std::to_string(phis_.size()));
  }
  for (std::size_t k = 0; k < thetas_.size(); ++k) {
    if (!std::isfinite(thetas_[k]) || !std::isfinite(phis_[k])) {
      throw std::invalid_argument("non-finite angle in round " + std::to_string(k + 1));
    }
    if (thetas_[k] < -kCubeSlack || thetas_[k] > kPi + kCubeSlack) {
      throw std::invalid_argument("theta for round " + std::to_string(k + 1) +
                                  " outside [0, pi]");
    }
  }
}

SingleQubitUnitary strategy_unitary(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {std::polar(c, phi), s, -s, std::polar(c, -phi)};
}

AlphaBeta AlphaBeta::from_theta(double theta) {
  return {std::cos(theta / 2.0), std::sin(theta / 2.0)};
}

void apply_entangler(StateVector& state) {
  if (state.num_qubits() < 2) throw std::invalid_argument("entangler needs at least 2 qubits");
  apply_pauli_x_string_exponential(state, kPi / 2.0);
}

void apply_disentangler(StateVector& state) {
  if (state.num_qubits() < 2) throw std::invalid_argument("entangler needs at least 2 qubits");
  apply_pauli_x_string_exponential(state, -kPi / 2.0);
}

void apply_gates(StateVector& state, const GateSequence& gates) {
  for (const Gate& gate : gates) {
    std::visit(Overloaded{
                   [&](const SingleQubitGate& g) { apply_single_qubit(state, g.qubit, g.u); },
                   [&](const CnotGate& g) { apply_cnot(state, g.control, g.target); },
               },
               gate);
  }
}

GateSequence adjoint(const GateSequence& gates) {
  GateSequence out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    std::visit(Overloaded{
                   [&](const SingleQubitGate& g) {
                     out.emplace_back(SingleQubitGate{g.qubit, g.u.adjoint()});
                   },
                   [&](const CnotGate& g) { out.emplace_back(g); },
               },
               *it);
  }
  return out;
}

GateSequence entangler_gate_circuit(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("entangler needs at least 2 qubits");
  GateSequence gates;
  const auto hadamard_layer = [&] {
    for (int q = 1; q <= n_qubits; ++q) {
      gates.emplace_back(SingleQubitGate{q, SingleQubitUnitary::hadamard()});
    }
  };
  hadamard_layer();
  for (int q = 1; q < n_qubits; ++q) gates.emplace_back(CnotGate{q, q + 1});
  gates.emplace_back(SingleQubitGate{n_qubits, SingleQubitUnitary::rz(-kPi / 2.0)});
  for (int q = n_qubits - 1; q >= 1; --q) gates.emplace_back(CnotGate{q, q + 1});
  hadamard_layer();
  return gates;
}

GateSequence ghz_preparation_circuit(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("GHZ circuit needs at least 2 qubits");
  GateSequence gates;
  gates.emplace_back(SingleQubitGate{1, SingleQubitUnitary::hadamard()});
  for (int q = 1; q < n_qubits; ++q) gates.emplace_back(CnotGate{q, q + 1});
  gates.emplace_back(SingleQubitGate{1, SingleQubitUnitary{1.0, 0.0, 0.0, kI}});
  return gates;
}

StateVector run_protocol(std::span<const double> thetas, std::span<const double> phis,
                         EntanglerBackend backend) {
  if (thetas.size() != phis.size()) throw std::invalid_argument("theta/phi length mismatch");
  const int n = static_cast<int>(thetas.size());
  StateVector state = StateVector::zero(n);
  apply_backend_entangler(state, backend, /*dagger=*/false);
  for (int k = 0; k < n; ++k) {
    apply_single_qubit(state, k + 1, strategy_unitary(thetas[k], phis[k]));
  }
  apply_backend_entangler(state, backend, /*dagger=*/true);

  const double norm = state.norm_squared();
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    throw InvariantViolation("protocol output norm drifted to " + std::to_string(norm));
  }
  return state;
}

StateVector run_protocol(std::span<const double> thetas, EntanglerBackend backend) {
  const std::vector<double> zeros(thetas.size(), 0.0);
  return run_protocol(thetas, zeros, backend);
}

StateVector run_protocol(const StrategyProfile& profile, EntanglerBackend backend) {
  return run_protocol(profile.thetas(), profile.phis(), backend);
}

std::array<Amplitude, 8> closed_form_amplitudes(double theta1, double theta2, double theta3) {
  const auto [a1, b1] = AlphaBeta::from_theta(theta1);
  const auto [a2, b2] = AlphaBeta::from_theta(theta2);
  const auto [a3, b3] = AlphaBeta::from_theta(theta3);
  std::array<Amplitude, 8> amp{};
  amp[0b000] = {a1 * a2 * a3, b1 * b2 * b3};
  amp[0b011] = {a1 * b2 * b3, b1 * a2 * a3};
  amp[0b101] = {b1 * a2 * b3, a1 * b2 * a3};
  amp[0b110] = {b1 * b2 * a3, a1 * a2 * b3};
  return amp;
}

double OutcomeProbabilities::total() const {
  return std::accumulate(p_defect_round.begin(), p_defect_round.end(), p_full_cooperation);
}

OutcomeProbabilities outcome_probabilities_closed_form(double theta1, double theta2,
                                                       double theta3) {
  const auto [a1, b1] = AlphaBeta::from_theta(theta1);
  const auto [a2, b2] = AlphaBeta::from_theta(theta2);
  const auto [a3, b3] = AlphaBeta::from_theta(theta3);
  const auto sq = [](double x) { return x * x; };
  OutcomeProbabilities p;
  p.p_defect_round = {
      sq(b1 * a2 * b3) + sq(a1 * b2 * a3) + sq(b1 * b2 * a3) + sq(a1 * a2 * b3),
      sq(a1 * b2 * b3) + sq(b1 * a2 * a3),
      0.0,
  };
  p.p_full_cooperation = sq(a1 * a2 * a3) + sq(b1 * b2 * b3);
  return p;
}

}  // namespace qcentipede
