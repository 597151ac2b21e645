//  Copyright 2026 The relind Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include "relind/boxes.hpp"
#include "relind/randomness.hpp"
#include "relind/spacetime.hpp"

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relind {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 4;
inline constexpr double kNormTolerance = 1e-12;

/// Dense pure state of up to four qubits. Qubit 0 is the leftmost tensor
/// factor, i.e. the most significant bit of the amplitude index.
class QuantumRegister {
 public:
  /// Normalises `amplitudes`. Throws DomainError unless the length is 2^n with
  /// 1 <= n <= 4 and the norm is non-zero.
  static QuantumRegister from_amplitudes(std::vector<Complex> amplitudes);
  /// Computational basis state from a bit string such as "001".
  static QuantumRegister basis_state(std::string_view bits);
  /// Tensor product of single-qubit states (each normalised on the way in).
  static QuantumRegister product(std::span<const std::array<Complex, 2>> qubits);

  int qubits() const noexcept { return qubits_; }
  const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
  double norm() const;

 private:
  QuantumRegister(int n, std::vector<Complex> amps) : qubits_(n), amplitudes_(std::move(amps)) {}
  int qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

/// Orthonormal single-qubit measurement basis; outcome k selects `vectors[k]`.
struct Basis {
  std::string name;
  std::array<std::array<Complex, 2>, 2> vectors;

  bool operator==(const Basis&) const = default;

  static Basis z();
  static Basis x();  ///< |0_x> = (|0> + |1>)/sqrt2
  static Basis y();  ///< |0_y> = (|0> + i|1>)/sqrt2
  /// Eigenbasis of n.sigma for the Bloch direction (theta, phi).
  static Basis bloch(double theta, double phi);
  /// Throws DomainError unless the pair is orthonormal within 1e-12.
  static Basis custom(std::array<Complex, 2> v0, std::array<Complex, 2> v1, std::string name = "custom");
  /// "x", "y" or "z"; throws DomainError otherwise.
  static Basis named(std::string_view name);
};

/// (|01> - |10>)/sqrt2
QuantumRegister singlet();
/// (|100> + |010> + |001>)/sqrt3
QuantumRegister w_state();
/// {"singlet", "w3"}.
std::map<std::string, QuantumRegister> standard_states();

/// Squared norms of the projections of `qubit` onto the two basis vectors.
std::pair<double, double> born_probabilities(const QuantumRegister& r, int qubit, const Basis& basis);

/// Rank-one projection of `qubit` onto basis vector `outcome`, renormalised.
/// Throws ModelInconsistency when that outcome has probability <= 1e-12.
QuantumRegister project(const QuantumRegister& r, int qubit, const Basis& basis, int outcome);

/// <r1|r2>. Throws DomainError on a qubit-count mismatch.
Complex overlap(const QuantumRegister& r1, const QuantumRegister& r2);

/// |<r1|r2>|^2, which ignores global phase.
double fidelity(const QuantumRegister& r1, const QuantumRegister& r2);

using Density2 = std::array<std::array<Complex, 2>, 2>;

/// Single-qubit reduced density operator by partial trace over the others.
Density2 reduced_density(const QuantumRegister& r, int qubit);
double max_abs_difference(const Density2& a, const Density2& b);

/// A projective measurement at a space-time point. Its outcome, once
/// realised, is the determination of `variable`.
struct MeasurementEvent {
  std::string variable;
  int qubit = 0;
  Basis basis = Basis::z();
  SpacetimePoint location;
  std::optional<int> outcome;
};

struct QuantumSetup {
  QuantumRegister initial = singlet();
  std::vector<MeasurementEvent> measurements;
};

/// The global state attributed at `point` and the measurements that shaped it.
struct StateAssignment {
  SpacetimePoint point;
  QuantumRegister state;
  std::vector<std::string> applied;
};

/// Applies, in causal order, the projections of exactly those measurements in
/// the closed causal past of `q`. Throws Error if one of them has no outcome.
StateAssignment state_at(const QuantumSetup& setup, const SpacetimePoint& q, const Minkowski& mk);

/// The textbook frame-dependent assignment: applies every measurement whose
/// time coordinate in `frame` is <= `frame_time`, ordered by that coordinate.
StateAssignment state_on_slice(const QuantumSetup& setup, const Frame& frame, double frame_time,
                               const Minkowski& mk);

/// Draws every unforced outcome from the Born rule, sequentially along a
/// causal linear extension of the measurement events. Forced outcomes are
/// kept (and must have non-zero probability).
QuantumSetup realize_outcomes(const QuantumSetup& setup, Rng& rng);

/// Born-rule box for a two-qubit state where Alice measures qubit 0 in
/// alice[x] and Bob measures qubit 1 in bob[y].
Box box_from_bases(const QuantumRegister& r, const std::array<Basis, 2>& alice,
                   const std::array<Basis, 2>& bob);

}  // namespace relind
