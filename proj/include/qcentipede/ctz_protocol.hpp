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

#ifndef QCENTIPEDE_CTZ_PROTOCOL_HPP_
#define QCENTIPEDE_CTZ_PROTOCOL_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "qcentipede/state_vector.hpp"

namespace qcentipede {

// Per-round rotation angles. Round k is played on qubit k; player 1 owns the
// odd rounds and player 2 the even ones.
class StrategyProfile {
 public:
  // phis default to zero. Throws std::invalid_argument if thetas is empty, the
  // lengths differ, any angle is non-finite, or any theta lies outside [0, pi].
  explicit StrategyProfile(std::vector<double> thetas);
  StrategyProfile(std::vector<double> thetas, std::vector<double> phis);

  std::size_t rounds() const { return thetas_.size(); }
  std::span<const double> thetas() const { return thetas_; }
  std::span<const double> phis() const { return phis_; }
  double theta(std::size_t round_index) const { return thetas_.at(round_index); }

  bool operator==(const StrategyProfile&) const = default;

 private:
  std::vector<double> thetas_;
  std::vector<double> phis_;
};

// U(theta, phi) = [[e^{i phi} cos(theta/2), sin(theta/2)],
//                  [-sin(theta/2),          e^{-i phi} cos(theta/2)]]
SingleQubitUnitary strategy_unitary(double theta, double phi = 0.0);

// cos(theta/2) and sin(theta/2): the amplitudes U(theta, 0) puts on |0> and
// |1> (up to sign) for each round.
struct AlphaBeta {
  double alpha;
  double beta;

  static AlphaBeta from_theta(double theta);
};

// Canonical maximal entangler J = (I + i X^{(x)n}) / sqrt(2), applied in place.
// Requires n >= 2.
void apply_entangler(StateVector& state);
void apply_disentangler(StateVector& state);

// Gate-level representation, used for the circuit backend.
struct SingleQubitGate {
  int qubit;
  SingleQubitUnitary u;
};
struct CnotGate {
  int control;
  int target;
};
using Gate = std::variant<SingleQubitGate, CnotGate>;
using GateSequence = std::vector<Gate>;

void apply_gates(StateVector& state, const GateSequence& gates);
GateSequence adjoint(const GateSequence& gates);

// Exact decomposition of J: H on every qubit, CNOT ladder 1->2->...->n,
// Rz(-pi/2) on qubit n, the ladder undone, H on every qubit. The ladder
// computes the parity of the Hadamard-basis bits into qubit n, so the middle
// three steps realize exp(i pi/4 Z^{(x)n}).
GateSequence entangler_gate_circuit(int n_qubits);

// The textbook GHZ preparation H(1), CNOT(1->2), ..., CNOT(n-1->n), S(1). It
// maps |0...0> to the same state as J, but is a different unitary elsewhere,
// so it is kept only as a reference circuit and is not a protocol backend.
GateSequence ghz_preparation_circuit(int n_qubits);

enum class EntanglerBackend { kMatrix, kCircuit };

// J, then U(theta_k, phi_k) on every round qubit, then J^dagger, starting from
// |0...0>. The backend selects how J is realized; J^dagger is always its exact
// adjoint. Angles are not range-checked here so finite-difference probes may
// step just outside the strategy cube.
StateVector run_protocol(std::span<const double> thetas, std::span<const double> phis,
                         EntanglerBackend backend = EntanglerBackend::kMatrix);
StateVector run_protocol(std::span<const double> thetas,
                         EntanglerBackend backend = EntanglerBackend::kMatrix);
StateVector run_protocol(const StrategyProfile& profile,
                         EntanglerBackend backend = EntanglerBackend::kMatrix);

// Closed-form three-round final state (phi = 0). Indexed by basis index, so
// element 3 is |011>. The odd-parity entries are identically zero.
std::array<Amplitude, 8> closed_form_amplitudes(double theta1, double theta2, double theta3);

struct OutcomeProbabilities {
  // p_defect_round[r - 1]: the game ends by defection at round r.
  std::vector<double> p_defect_round;
  double p_full_cooperation = 0.0;

  double total() const;
};

// Closed-form three-round outcome probabilities (phi = 0).
OutcomeProbabilities outcome_probabilities_closed_form(double theta1, double theta2,
                                                       double theta3);

}  // namespace qcentipede

#endif  // QCENTIPEDE_CTZ_PROTOCOL_HPP_
