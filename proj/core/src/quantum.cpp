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

#include "relind/quantum.hpp"

#include "relind/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace relind {

namespace {

const Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_qubit(const QuantumRegister& r, int qubit) {
  if (qubit < 0 || qubit >= r.qubits()) {
    throw DomainError("qubit index " + std::to_string(qubit) + " out of range for a " +
                      std::to_string(r.qubits()) + "-qubit register");
  }
}

int bit_of(std::size_t index, int qubit, int n) { return static_cast<int>((index >> (n - 1 - qubit)) & 1); }

// Amplitude of the projection of `qubit` onto `v`, kept in the full space.
std::vector<Complex> projected(const QuantumRegister& r, int qubit, const std::array<Complex, 2>& v) {
  const int n = r.qubits();
  const auto& amps = r.amplitudes();
  const std::size_t stride = std::size_t{1} << (n - 1 - qubit);
  std::vector<Complex> out(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (bit_of(i, qubit, n)) continue;
    const Complex c = std::conj(v[0]) * amps[i] + std::conj(v[1]) * amps[i | stride];
    out[i] = v[0] * c;
    out[i | stride] = v[1] * c;
  }
  return out;
}

double squared_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

bool causally_before(const MeasurementEvent* a, const MeasurementEvent* b) {
  // Rest-frame time order is a linear extension of the causal order.
  if (a->location.t != b->location.t) return a->location.t < b->location.t;
  return a->location.x < b->location.x;
}

}  // namespace

QuantumRegister QuantumRegister::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t size = amplitudes.size();
  int n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  if (size < 2 || (std::size_t{1} << n) != size || n > kMaxQubits) {
    throw DomainError("amplitude vector length must be 2^n with 1 <= n <= " + std::to_string(kMaxQubits));
  }
  for (const auto& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw DomainError("non-finite amplitude");
  }
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (norm <= kNormTolerance) throw DomainError("zero state vector");
  for (auto& a : amplitudes) a /= norm;
  return QuantumRegister(n, std::move(amplitudes));
}

QuantumRegister QuantumRegister::basis_state(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw DomainError("basis state needs 1 to 4 bits");
  }
  std::size_t index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw DomainError("basis state label must be binary");
    index = index * 2 + static_cast<std::size_t>(ch - '0');
  }
  std::vector<Complex> amps(std::size_t{1} << bits.size());
  amps[index] = 1.0;
  return from_amplitudes(std::move(amps));
}

QuantumRegister QuantumRegister::product(std::span<const std::array<Complex, 2>> qubits) {
  if (qubits.empty() || qubits.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw DomainError("product state needs 1 to 4 qubits");
  }
  std::vector<Complex> amps{1.0};
  for (const auto& q : qubits) {
    const double nq = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
    if (nq <= kNormTolerance) throw DomainError("zero single-qubit state");
    std::vector<Complex> next;
    next.reserve(amps.size() * 2);
    for (const auto& a : amps) {
      next.push_back(a * q[0] / nq);
      next.push_back(a * q[1] / nq);
    }
    amps = std::move(next);
  }
  return from_amplitudes(std::move(amps));
}

double QuantumRegister::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

Basis Basis::z() { return {"z", {{{1.0, 0.0}, {0.0, 1.0}}}}; }

Basis Basis::x() { return {"x", {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}}}; }

Basis Basis::y() { return {"y", {{{kInvSqrt2, kI * kInvSqrt2}, {kInvSqrt2, -kI * kInvSqrt2}}}}; }

Basis Basis::bloch(double theta, double phi) {
  const Complex phase = std::polar(1.0, phi);
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return custom({c, phase * s}, {s, -phase * c}, "bloch");
}

Basis Basis::custom(std::array<Complex, 2> v0, std::array<Complex, 2> v1, std::string name) {
  const double n0 = std::norm(v0[0]) + std::norm(v0[1]);
  const double n1 = std::norm(v1[0]) + std::norm(v1[1]);
  const Complex ip = std::conj(v0[0]) * v1[0] + std::conj(v0[1]) * v1[1];
  if (std::abs(n0 - 1.0) > 1e-12 || std::abs(n1 - 1.0) > 1e-12 || std::abs(ip) > 1e-12) {
    throw DomainError("measurement basis vectors are not orthonormal");
  }
  return {std::move(name), {v0, v1}};
}

Basis Basis::named(std::string_view name) {
  if (name == "x") return x();
  if (name == "y") return y();
  if (name == "z") return z();
  throw DomainError("unknown basis '" + std::string(name) + "' (expected x, y or z)");
}

QuantumRegister singlet() {
  return QuantumRegister::from_amplitudes({0.0, kInvSqrt2, -kInvSqrt2, 0.0});
}

QuantumRegister w_state() {
  const double a = 1.0 / std::sqrt(3.0);
  return QuantumRegister::from_amplitudes({0.0, a, a, 0.0, a, 0.0, 0.0, 0.0});
}

std::map<std::string, QuantumRegister> standard_states() {
  return {{"singlet", singlet()}, {"w3", w_state()}};
}

std::pair<double, double> born_probabilities(const QuantumRegister& r, int qubit, const Basis& basis) {
  check_qubit(r, qubit);
  const double p0 = squared_norm(projected(r, qubit, basis.vectors[0]));
  const double p1 = squared_norm(projected(r, qubit, basis.vectors[1]));
  return {p0, p1};
}

QuantumRegister project(const QuantumRegister& r, int qubit, const Basis& basis, int outcome) {
  check_qubit(r, qubit);
  if (outcome != 0 && outcome != 1) throw DomainError("measurement outcome must be a bit");
  auto amps = projected(r, qubit, basis.vectors[outcome]);
  if (squared_norm(amps) <= kNormTolerance) {
    throw ModelInconsistency("projection of qubit " + std::to_string(qubit) + " onto outcome " +
                             std::to_string(outcome) + " in basis " + basis.name + " has probability zero");
  }
  return QuantumRegister::from_amplitudes(std::move(amps));
}

Complex overlap(const QuantumRegister& r1, const QuantumRegister& r2) {
  if (r1.qubits() != r2.qubits()) throw DomainError("overlap of registers with different qubit counts");
  Complex s = 0.0;
  for (std::size_t i = 0; i < r1.amplitudes().size(); ++i) s += std::conj(r1.amplitudes()[i]) * r2.amplitudes()[i];
  return s;
}

double fidelity(const QuantumRegister& r1, const QuantumRegister& r2) { return std::norm(overlap(r1, r2)); }

Density2 reduced_density(const QuantumRegister& r, int qubit) {
  check_qubit(r, qubit);
  const int n = r.qubits();
  const std::size_t stride = std::size_t{1} << (n - 1 - qubit);
  const auto& amps = r.amplitudes();
  Density2 rho{};
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (bit_of(i, qubit, n)) continue;
    const std::array<Complex, 2> pair{amps[i], amps[i | stride]};
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) rho[b][c] += pair[b] * std::conj(pair[c]);
  }
  return rho;
}

double max_abs_difference(const Density2& a, const Density2& b) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

namespace {

StateAssignment apply_in_order(const QuantumSetup& setup, SpacetimePoint point,
                               std::vector<const MeasurementEvent*> events) {
  StateAssignment out{std::move(point), setup.initial, {}};
  for (const auto* e : events) {
    if (!e->outcome) throw Error("measurement '" + e->variable + "' has no realised outcome");
    out.state = project(out.state, e->qubit, e->basis, *e->outcome);
    out.applied.push_back(e->variable);
  }
  return out;
}

}  // namespace

StateAssignment state_at(const QuantumSetup& setup, const SpacetimePoint& q, const Minkowski& mk) {
  std::vector<const MeasurementEvent*> past;
  for (const auto& m : setup.measurements) {
    if (mk.in_future_cone(m.location, q)) past.push_back(&m);
  }
  std::stable_sort(past.begin(), past.end(), causally_before);
  return apply_in_order(setup, q, std::move(past));
}

StateAssignment state_on_slice(const QuantumSetup& setup, const Frame& frame, double frame_time,
                               const Minkowski& mk) {
  std::vector<std::pair<double, const MeasurementEvent*>> before;
  for (const auto& m : setup.measurements) {
    const double tf = mk.simultaneity_coordinate(frame, m.location);
    if (tf <= frame_time + mk.epsilon()) before.emplace_back(tf, &m);
  }
  std::stable_sort(before.begin(), before.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<const MeasurementEvent*> ordered;
  for (const auto& [tf, m] : before) ordered.push_back(m);
  SpacetimePoint label(frame_time, 0.0, frame.label);
  return apply_in_order(setup, std::move(label), std::move(ordered));
}

QuantumSetup realize_outcomes(const QuantumSetup& setup, Rng& rng) {
  QuantumSetup out = setup;
  std::vector<MeasurementEvent*> order;
  for (auto& m : out.measurements) {
    check_qubit(out.initial, m.qubit);
    order.push_back(&m);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const MeasurementEvent* a, const MeasurementEvent* b) { return causally_before(a, b); });
  QuantumRegister state = out.initial;
  for (auto* m : order) {
    // Draw unconditionally so forcing one outcome leaves other draws unchanged.
    const double u = rng.uniform();
    if (!m->outcome) {
      const auto [p0, p1] = born_probabilities(state, m->qubit, m->basis);
      m->outcome = u * (p0 + p1) < p0 ? 0 : 1;
    }
    state = project(state, m->qubit, m->basis, *m->outcome);
  }
  return out;
}

Box box_from_bases(const QuantumRegister& r, const std::array<Basis, 2>& alice, const std::array<Basis, 2>& bob) {
  if (r.qubits() != 2) throw DomainError("box_from_bases needs a two-qubit state");
  Box::Table t;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const auto [pa0, pa1] = born_probabilities(r, 0, alice[x]);
      const std::array<double, 2> pa{pa0, pa1};
      for (int a = 0; a < 2; ++a) {
        if (pa[a] <= kNormTolerance) continue;
        const auto after = project(r, 0, alice[x], a);
        const auto [pb0, pb1] = born_probabilities(after, 1, bob[y]);
        t[Box::index(a, 0, x, y)] = Probability::inexact(pa[a] * pb0);
        t[Box::index(a, 1, x, y)] = Probability::inexact(pa[a] * pb1);
      }
    }
  }
  return Box(std::move(t), 1e-9);
}

}  // namespace relind
