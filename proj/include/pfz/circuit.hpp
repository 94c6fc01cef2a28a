// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pfz/types.hpp"

namespace pfz {

// Gate conventions (fixed project-wide):
//   Rz(t) = exp(-i (t/2) sigma_z), Rx/Ry analogous with the 1/2 factor;
//   XX(t) = exp(-i t sigma_x (x) sigma_x), YY/ZZ analogous WITHOUT the 1/2;
//   CRz(t) = |0><0| (x) I + |1><1| (x) Rz(t), control = first target;
//   CNOT control = first target.
// Qubit 0 is the leftmost site and the most significant bit of basis indices;
// |0> is spin-up (sigma_z eigenvalue +1).
enum class GateKind { H, X, Rx, Ry, Rz, XX, YY, ZZ, CNOT, SWAP, CRz };

struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;        // -1 for one-qubit gates
  double theta = 0.0; // ignored by non-parameterized gates

  static Gate h(int q) { return {GateKind::H, q}; }
  static Gate x(int q) { return {GateKind::X, q}; }
  static Gate rx(int q, double t) { return {GateKind::Rx, q, -1, t}; }
  static Gate ry(int q, double t) { return {GateKind::Ry, q, -1, t}; }
  static Gate rz(int q, double t) { return {GateKind::Rz, q, -1, t}; }
  static Gate xx(int a, int b, double t) { return {GateKind::XX, a, b, t}; }
  static Gate yy(int a, int b, double t) { return {GateKind::YY, a, b, t}; }
  static Gate zz(int a, int b, double t) { return {GateKind::ZZ, a, b, t}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, a, b}; }
  static Gate crz(int c, int t, double th) { return {GateKind::CRz, c, t, th}; }

  bool two_qubit() const { return q1 >= 0; }
  bool parameterized() const;
};

bool is_two_qubit_kind(GateKind k);
std::string to_string(GateKind k);
GateKind gate_kind_from_string(const std::string& s);

// Dense unitary of a single gate: 2x2 or 4x4 over the target bits, first
// target = high bit.  Row-major.
std::array<cplx, 4> gate_matrix_1q(const Gate& g);
std::array<cplx, 16> gate_matrix_2q(const Gate& g);
MatC gate_matrix(const Gate& g);  // Eigen view of the same data

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}
  void add(const Gate& g);  // validates targets
  Circuit inverse() const;  // gate-wise inverse in reverse order
};

class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |00...0>
  static StateVector from_amplitudes(int n_qubits, std::vector<cplx> amps);
  static StateVector from_amplitudes(int n_qubits, const VecC& amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  cplx* data() { return amps_.data(); }
  const cplx* data() const { return amps_.data(); }

  double norm_sq() const;
  void normalize();

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

void apply_gate(StateVector& state, const Gate& gate);
StateVector run_circuit(const Circuit& circuit, StateVector initial);
StateVector run_circuit(const Circuit& circuit);  // from |00...0>

// Reduced density matrix over `keep` (ascending qubit indices); keep[0] is
// the most significant bit of the reduced index.
MatC partial_trace(const StateVector& state, const std::vector<int>& keep);

double expectation(const StateVector& state, const MatC& observable);
double expect_z(const StateVector& state, int qubit);

// Measurement bases. Per readout convention, X appends Ry(-pi/2) and Y
// appends Rx(+pi/2) before a computational-basis measurement.
enum class Basis : std::uint8_t { Z, X, Y };

struct ShotRecord {
  std::vector<std::uint8_t> bits;  // bits[q] for qubit q, 0 = |0>
  std::vector<Basis> bases;        // basis tag per qubit
};

std::vector<ShotRecord> sample_shots(const StateVector& state,
                                     const std::vector<Basis>& bases,
                                     int n_shots, std::uint64_t rng_seed);

// Line-oriented text format: header "QUBITS n", then one gate per line:
// "GATE q0 [q1] [theta]".
std::string circuit_to_text(const Circuit& c);
Circuit circuit_from_text(const std::string& text);
Circuit circuit_from_text(std::istream& in);

}  // namespace pfz
