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

#include "qcentipede/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qcentipede/errors.hpp"
#include "qcentipede/rng.hpp"

namespace qcentipede {
namespace {

constexpr Amplitude kI{0.0, 1.0};

void check_qubit(const StateVector& state, int qubit) {
  if (qubit < 1 || qubit > state.num_qubits()) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " outside 1.." +
                            std::to_string(state.num_qubits()));
  }
}

std::size_t bit_mask(const StateVector& state, int qubit) {
  return std::size_t{1} << (state.num_qubits() - qubit);
}

}  // namespace

SingleQubitUnitary SingleQubitUnitary::hadamard() {
  const double r = std::numbers::sqrt2 / 2.0;
  return {r, r, r, -r};
}

SingleQubitUnitary SingleQubitUnitary::rz(double angle) {
  return {std::polar(1.0, -angle / 2.0), 0.0, 0.0, std::polar(1.0, angle / 2.0)};
}

SingleQubitUnitary SingleQubitUnitary::adjoint() const {
  return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

SingleQubitUnitary SingleQubitUnitary::operator*(const SingleQubitUnitary& rhs) const {
  return {m00 * rhs.m00 + m01 * rhs.m10, m00 * rhs.m01 + m01 * rhs.m11,
          m10 * rhs.m00 + m11 * rhs.m10, m10 * rhs.m01 + m11 * rhs.m11};
}

double SingleQubitUnitary::unitarity_error() const {
  const SingleQubitUnitary p = (*this) * adjoint();
  return std::max({std::abs(p.m00 - 1.0), std::abs(p.m01), std::abs(p.m10),
                   std::abs(p.m11 - 1.0)});
}

StateVector StateVector::zero(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::out_of_range("qubit count " + std::to_string(n_qubits) + " outside 1.." +
                            std::to_string(kMaxQubits));
  }
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  amps[0] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t len = amplitudes.size();
  if (len < 2 || !std::has_single_bit(len) ||
      std::countr_zero(len) > kMaxQubits) {
    throw std::out_of_range("amplitude count " + std::to_string(len) +
                            " is not 2^n for 1 <= n <= " + std::to_string(kMaxQubits));
  }
  return StateVector(std::countr_zero(len), std::move(amplitudes));
}

Amplitude StateVector::amplitude(std::string_view bits) const {
  if (static_cast<int>(bits.size()) != n_qubits_) {
    throw std::invalid_argument("bitstring '" + std::string(bits) + "' has wrong length for " +
                                std::to_string(n_qubits_) + " qubits");
  }
  return amplitudes_[from_bitstring(bits)];
}

double StateVector::norm_squared() const {
  return std::accumulate(amplitudes_.begin(), amplitudes_.end(), 0.0,
                         [](double acc, const Amplitude& a) { return acc + std::norm(a); });
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                 [](const Amplitude& a) { return std::norm(a); });
  return p;
}

double StateVector::max_abs_diff(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("qubit count mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
    worst = std::max(worst, std::abs(amplitudes_[k] - other.amplitudes_[k]));
  }
  return worst;
}

std::string to_bitstring(std::size_t index, int n_qubits) {
  std::string bits(static_cast<std::size_t>(n_qubits), '0');
  for (int k = 0; k < n_qubits; ++k) {
    if ((index >> (n_qubits - 1 - k)) & 1U) bits[static_cast<std::size_t>(k)] = '1';
  }
  return bits;
}

std::size_t from_bitstring(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("bitstring length out of range");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring '" + std::string(bits) + "' has non-binary digit");
    }
    index = (index << 1) | static_cast<std::size_t>(c == '1');
  }
  return index;
}

void apply_single_qubit(StateVector& state, int qubit, const SingleQubitUnitary& u) {
  check_qubit(state, qubit);
  const std::size_t mask = bit_mask(state, qubit);
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Amplitude a0 = amps[i];
    const Amplitude a1 = amps[i | mask];
    amps[i] = u.m00 * a0 + u.m01 * a1;
    amps[i | mask] = u.m10 * a0 + u.m11 * a1;
  }
}

void apply_cnot(StateVector& state, int control, int target) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) {
    throw std::invalid_argument("cnot control and target are both qubit " +
                                std::to_string(control));
  }
  const std::size_t cmask = bit_mask(state, control);
  const std::size_t tmask = bit_mask(state, target);
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
  }
}

void apply_phase_s(StateVector& state, int qubit, bool dagger) {
  check_qubit(state, qubit);
  const std::size_t mask = bit_mask(state, qubit);
  const Amplitude phase = dagger ? -kI : kI;
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) amps[i] *= phase;
  }
}

void apply_pauli_x_string_exponential(StateVector& state, double angle) {
  const double c = std::cos(angle / 2.0);
  const Amplitude is = kI * std::sin(angle / 2.0);
  const std::size_t all = state.size() - 1;
  auto amps = state.amplitudes();
  // Each complement pair is visited once, from its member with the top bit clear.
  for (std::size_t x = 0; x < amps.size() / 2; ++x) {
    const std::size_t xbar = all ^ x;
    const Amplitude ax = amps[x];
    const Amplitude axbar = amps[xbar];
    amps[x] = c * ax + is * axbar;
    amps[xbar] = c * axbar + is * ax;
  }
}

std::uint64_t MeasurementCounts::count(const std::string& bits) const {
  auto it = counts.find(bits);
  return it == counts.end() ? 0 : it->second;
}

std::vector<std::size_t> sample_indices(const StateVector& state, std::uint64_t shots,
                                        std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");

  std::vector<double> cumulative = state.probabilities();
  std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());
  const double total = cumulative.back();
  if (!std::isfinite(total) || total <= 0.0) {
    throw std::invalid_argument("cannot sample from a state with zero or non-finite norm");
  }

  // Inverse-CDF draw against the (possibly slightly unnormalized) total. Zero
  // probability entries never win: upper_bound skips runs of equal values.
  Rng rng(seed);
  std::vector<std::size_t> draws;
  draws.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    draws.push_back(static_cast<std::size_t>(it - cumulative.begin()));
  }
  return draws;
}

MeasurementCounts sample_measurements(const StateVector& state, std::uint64_t shots,
                                      std::uint64_t seed) {
  std::vector<std::uint64_t> by_index(state.size());
  for (std::size_t idx : sample_indices(state, shots, seed)) ++by_index[idx];

  MeasurementCounts out;
  out.shots = shots;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < by_index.size(); ++i) {
    if (by_index[i] == 0) continue;
    out.counts.emplace(to_bitstring(i, state.num_qubits()), by_index[i]);
    total += by_index[i];
  }
  if (total != shots) throw InvariantViolation("measurement counts do not sum to shots");
  return out;
}

std::optional<Amplitude> fit_global_phase(const StateVector& a, const StateVector& b,
                                          double tol) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("qubit count mismatch");
  }
  const auto bs = b.amplitudes();
  const auto pivot = static_cast<std::size_t>(
      std::max_element(bs.begin(), bs.end(),
                       [](const Amplitude& x, const Amplitude& y) {
                         return std::abs(x) < std::abs(y);
                       }) -
      bs.begin());

  Amplitude c{1.0, 0.0};
  if (std::abs(bs[pivot]) > 0.0) {
    const Amplitude ratio = a[pivot] / bs[pivot];
    if (std::abs(ratio) > 0.0) c = ratio / std::abs(ratio);
  }

  double residual = 0.0;
  for (std::size_t k = 0; k < bs.size(); ++k) residual += std::norm(a[k] - c * bs[k]);
  if (std::sqrt(residual) > tol) return std::nullopt;
  return c;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
  return fit_global_phase(a, b, tol).has_value();
}

}  // namespace qcentipede
