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

#ifndef QCENTIPEDE_STATE_VECTOR_HPP_
#define QCENTIPEDE_STATE_VECTOR_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcentipede {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;

// 2x2 complex matrix, row-major: [[m00, m01], [m10, m11]].
struct SingleQubitUnitary {
  Amplitude m00{1.0};
  Amplitude m01{0.0};
  Amplitude m10{0.0};
  Amplitude m11{1.0};

  static SingleQubitUnitary identity() { return {}; }
  static SingleQubitUnitary hadamard();
  // Rz(angle) = diag(e^{-i angle/2}, e^{i angle/2}).
  static SingleQubitUnitary rz(double angle);

  SingleQubitUnitary adjoint() const;
  SingleQubitUnitary operator*(const SingleQubitUnitary& rhs) const;

  // Max element-wise deviation of U U^dagger from the identity.
  double unitarity_error() const;
  bool is_unitary(double tol = 1e-12) const { return unitarity_error() <= tol; }
};

// Dense register of n qubits.
//
// Qubits are numbered 1..n. Qubit k is round k of the game and occupies bit
// (n - k) of the amplitude index, so the bitstring "b1 b2 ... bn" read left to
// right is the binary representation of the index. Qubit 1 is the most
// significant bit.
class StateVector {
 public:
  // |0...0> on n qubits. Throws std::out_of_range unless 1 <= n <= kMaxQubits.
  static StateVector zero(int n_qubits);

  // Takes ownership of the amplitudes as given (no normalization). The length
  // must be a power of two with 1 <= log2(length) <= kMaxQubits.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  int num_qubits() const { return n_qubits_; }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> amplitudes() { return amplitudes_; }

  const Amplitude& operator[](std::size_t index) const { return amplitudes_[index]; }
  Amplitude& operator[](std::size_t index) { return amplitudes_[index]; }

  // Amplitude of the basis state named by a bitstring such as "011".
  Amplitude amplitude(std::string_view bits) const;

  double norm_squared() const;
  std::vector<double> probabilities() const;

  // Largest element-wise |a_k - b_k|; throws on qubit-count mismatch.
  double max_abs_diff(const StateVector& other) const;

 private:
  StateVector(int n_qubits, std::vector<Amplitude> amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

  int n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

// Index <-> bitstring conversion following the ordering documented above.
std::string to_bitstring(std::size_t index, int n_qubits);
std::size_t from_bitstring(std::string_view bits);

// Gate kernels. All mutate in place and take 1-based qubit numbers; an
// out-of-range qubit throws std::out_of_range.
void apply_single_qubit(StateVector& state, int qubit, const SingleQubitUnitary& u);
// Throws std::invalid_argument when control == target.
void apply_cnot(StateVector& state, int control, int target);
// Multiplies basis states with the qubit set by i (or -i for the adjoint).
void apply_phase_s(StateVector& state, int qubit, bool dagger = false);
// exp(i angle/2 X^{(x)n}) = cos(angle/2) I + i sin(angle/2) X^{(x)n}.
// X^{(x)n} maps every index to its bitwise complement, so the update mixes
// complement pairs directly.
void apply_pauli_x_string_exponential(StateVector& state, double angle);

struct MeasurementCounts {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;

  std::uint64_t count(const std::string& bits) const;
};

// Draws `shots` i.i.d. computational-basis outcomes. Deterministic for a given
// (state, shots, seed). Throws std::invalid_argument when shots == 0.
MeasurementCounts sample_measurements(const StateVector& state, std::uint64_t shots,
                                      std::uint64_t seed);

// Same draws as sample_measurements, as raw basis indices in draw order.
std::vector<std::size_t> sample_indices(const StateVector& state, std::uint64_t shots,
                                        std::uint64_t seed);

// Unit-modulus c minimizing the mismatch at the largest |b_k|, returned only if
// ||a - c b|| <= tol. Throws std::invalid_argument on qubit-count mismatch.
std::optional<Amplitude> fit_global_phase(const StateVector& a, const StateVector& b,
                                          double tol);

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol);

}  // namespace qcentipede

#endif  // QCENTIPEDE_STATE_VECTOR_HPP_
