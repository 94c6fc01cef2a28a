// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors

#include "pfz/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "pfz/errors.hpp"
#include "pfz/simd/kernels.hpp"
#include "pfz/util.hpp"

namespace pfz {

namespace {
constexpr cplx kI{0.0, 1.0};

void check_target(int q, int n_qubits) {
  if (q < 0 || q >= n_qubits) {
    throw IndexOutOfRange("gate target " + std::to_string(q) + " out of range for " +
                          std::to_string(n_qubits) + " qubits");
  }
}
}  // namespace

bool Gate::parameterized() const {
  switch (kind) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::XX:
    case GateKind::YY:
    case GateKind::ZZ:
    case GateKind::CRz:
      return true;
    default:
      return false;
  }
}

bool is_two_qubit_kind(GateKind k) {
  switch (k) {
    case GateKind::XX:
    case GateKind::YY:
    case GateKind::ZZ:
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::CRz:
      return true;
    default:
      return false;
  }
}

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Rx: return "RX";
    case GateKind::Ry: return "RY";
    case GateKind::Rz: return "RZ";
    case GateKind::XX: return "XX";
    case GateKind::YY: return "YY";
    case GateKind::ZZ: return "ZZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CRz: return "CRZ";
  }
  return "?";
}

GateKind gate_kind_from_string(const std::string& s) {
  if (s == "H") return GateKind::H;
  if (s == "X") return GateKind::X;
  if (s == "RX") return GateKind::Rx;
  if (s == "RY") return GateKind::Ry;
  if (s == "RZ") return GateKind::Rz;
  if (s == "XX") return GateKind::XX;
  if (s == "YY") return GateKind::YY;
  if (s == "ZZ") return GateKind::ZZ;
  if (s == "CNOT") return GateKind::CNOT;
  if (s == "SWAP") return GateKind::SWAP;
  if (s == "CRZ") return GateKind::CRz;
  throw ConfigError("unknown gate name: " + s);
}

std::array<cplx, 4> gate_matrix_1q(const Gate& g) {
  const double t = g.theta;
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::X:
      return {0, 1, 1, 0};
    case GateKind::Rx:
      return {c, -kI * s, -kI * s, c};
    case GateKind::Ry:
      return {c, -s, s, c};
    case GateKind::Rz:
      return {std::exp(-kI * (t / 2)), 0, 0, std::exp(kI * (t / 2))};
    default:
      throw IndexOutOfRange("not a one-qubit gate: " + to_string(g.kind));
  }
}

std::array<cplx, 16> gate_matrix_2q(const Gate& g) {
  const double t = g.theta;
  const double c = std::cos(t), s = std::sin(t);
  switch (g.kind) {
    case GateKind::XX:
      // cos t * I - i sin t * (sx (x) sx)
      return {c, 0, 0, -kI * s,
              0, c, -kI * s, 0,
              0, -kI * s, c, 0,
              -kI * s, 0, 0, c};
    case GateKind::YY:
      // sy (x) sy = antidiag(-1, +1, +1, -1)
      return {c, 0, 0, kI * s,
              0, c, -kI * s, 0,
              0, -kI * s, c, 0,
              kI * s, 0, 0, c};
    case GateKind::ZZ:
      return {std::exp(-kI * t), 0, 0, 0,
              0, std::exp(kI * t), 0, 0,
              0, 0, std::exp(kI * t), 0,
              0, 0, 0, std::exp(-kI * t)};
    case GateKind::CNOT:
      return {1, 0, 0, 0,
              0, 1, 0, 0,
              0, 0, 0, 1,
              0, 0, 1, 0};
    case GateKind::SWAP:
      return {1, 0, 0, 0,
              0, 0, 1, 0,
              0, 1, 0, 0,
              0, 0, 0, 1};
    case GateKind::CRz:
      return {1, 0, 0, 0,
              0, 1, 0, 0,
              0, 0, std::exp(-kI * (t / 2)), 0,
              0, 0, 0, std::exp(kI * (t / 2))};
    default:
      throw IndexOutOfRange("not a two-qubit gate: " + to_string(g.kind));
  }
}

MatC gate_matrix(const Gate& g) {
  if (g.two_qubit()) {
    const auto m = gate_matrix_2q(g);
    MatC out(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) out(r, c) = m[4 * r + c];
    return out;
  }
  const auto m = gate_matrix_1q(g);
  MatC out(2, 2);
  out << m[0], m[1], m[2], m[3];
  return out;
}

void Circuit::add(const Gate& g) {
  check_target(g.q0, n_qubits);
  const bool two = is_two_qubit_kind(g.kind);
  if (two) {
    check_target(g.q1, n_qubits);
    if (g.q0 == g.q1) throw IndexOutOfRange("two-qubit gate with identical targets");
  } else if (g.q1 >= 0) {
    throw IndexOutOfRange("one-qubit gate with a second target");
  }
  gates.push_back(g);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    Gate g = *it;
    if (g.parameterized()) g.theta = -g.theta;
    inv.add(g);
  }
  return inv;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 24) {
    throw DimensionOverflow("statevector qubit count out of range: " + std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<cplx> amps) {
  StateVector s(n_qubits);
  if (amps.size() != s.dim()) throw DimensionOverflow("amplitude count does not match qubit count");
  s.amps_ = std::move(amps);
  return s;
}

StateVector StateVector::from_amplitudes(int n_qubits, const VecC& amps) {
  return from_amplitudes(
      n_qubits, std::vector<cplx>(amps.data(), amps.data() + amps.size()));
}

double StateVector::norm_sq() const {
  return simd::active_kernels().norm_sq(amps_.data(), amps_.size());
}

void StateVector::normalize() {
  const double n = std::sqrt(norm_sq());
  if (n <= 0.0) return;
  for (auto& a : amps_) a /= n;
}

void apply_gate(StateVector& state, const Gate& gate) {
  const int n = state.n_qubits();
  check_target(gate.q0, n);
  const auto& ks = simd::active_kernels();
  switch (gate.kind) {
    case GateKind::Rz: {
      const auto m = gate_matrix_1q(gate);
      ks.apply_1q_diag(state.data(), n, gate.q0, m[0], m[3]);
      return;
    }
    case GateKind::H:
    case GateKind::X:
    case GateKind::Rx:
    case GateKind::Ry: {
      const auto m = gate_matrix_1q(gate);
      ks.apply_1q(state.data(), n, gate.q0, m.data());
      return;
    }
    default:
      break;
  }
  check_target(gate.q1, n);
  if (gate.q0 == gate.q1) throw IndexOutOfRange("two-qubit gate with identical targets");
  if (gate.kind == GateKind::ZZ || gate.kind == GateKind::CRz) {
    const auto m = gate_matrix_2q(gate);
    const cplx d[4] = {m[0], m[5], m[10], m[15]};
    ks.apply_2q_diag(state.data(), n, gate.q0, gate.q1, d);
    return;
  }
  const auto m = gate_matrix_2q(gate);
  ks.apply_2q(state.data(), n, gate.q0, gate.q1, m.data());
}

StateVector run_circuit(const Circuit& circuit, StateVector initial) {
  if (initial.n_qubits() != circuit.n_qubits) {
    throw DimensionOverflow("circuit/state qubit count mismatch");
  }
  for (const auto& g : circuit.gates) apply_gate(initial, g);
  return initial;
}

StateVector run_circuit(const Circuit& circuit) {
  return run_circuit(circuit, StateVector(circuit.n_qubits));
}

MatC partial_trace(const StateVector& state, const std::vector<int>& keep) {
  if (keep.empty()) throw EmptyKeepSet("partial_trace: keep set is empty");
  const int n = state.n_qubits();
  std::vector<int> ks = keep;
  std::sort(ks.begin(), ks.end());
  if (std::adjacent_find(ks.begin(), ks.end()) != ks.end()) {
    throw IndexOutOfRange("partial_trace: duplicate qubit in keep set");
  }
  for (int q : ks) check_target(q, n);

  std::vector<int> env;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(ks.begin(), ks.end(), q)) env.push_back(q);
  }
  const int nk = static_cast<int>(ks.size());
  const int ne = static_cast<int>(env.size());
  const std::size_t dk = std::size_t{1} << nk;
  const std::size_t de = std::size_t{1} << ne;

  // Full-index offsets for every reduced index and every environment index.
  std::vector<std::size_t> base_k(dk, 0), base_e(de, 0);
  for (std::size_t i = 0; i < dk; ++i) {
    for (int t = 0; t < nk; ++t) {
      if (i & (std::size_t{1} << (nk - 1 - t))) base_k[i] |= std::size_t{1} << (n - 1 - ks[t]);
    }
  }
  for (std::size_t e = 0; e < de; ++e) {
    for (int u = 0; u < ne; ++u) {
      if (e & (std::size_t{1} << (ne - 1 - u))) base_e[e] |= std::size_t{1} << (n - 1 - env[u]);
    }
  }

  MatC rho = MatC::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  VecC col(static_cast<Eigen::Index>(dk));
  for (std::size_t e = 0; e < de; ++e) {
    for (std::size_t i = 0; i < dk; ++i) col(static_cast<Eigen::Index>(i)) = state[base_k[i] | base_e[e]];
    rho.noalias() += col * col.adjoint();
  }
  return rho;
}

double expectation(const StateVector& state, const MatC& observable) {
  const auto dim = static_cast<Eigen::Index>(state.dim());
  if (observable.rows() != dim || observable.cols() != dim) {
    throw DimensionOverflow("observable dimension does not match state");
  }
  Eigen::Map<const VecC> v(state.data(), dim);
  return (v.adjoint() * (observable * v))(0).real();
}

double expect_z(const StateVector& state, int qubit) {
  check_target(qubit, state.n_qubits());
  return simd::active_kernels().expect_z(state.data(), state.n_qubits(), qubit);
}

std::vector<ShotRecord> sample_shots(const StateVector& state,
                                     const std::vector<Basis>& bases,
                                     int n_shots, std::uint64_t rng_seed) {
  const int n = state.n_qubits();
  if (static_cast<int>(bases.size()) != n) {
    throw LayoutMismatch("basis tag count does not match qubit count");
  }
  if (n_shots < 1) throw ConfigError("n_shots must be >= 1");

  StateVector rotated = state;
  for (int q = 0; q < n; ++q) {
    if (bases[q] == Basis::X) apply_gate(rotated, Gate::ry(q, -kPi / 2));
    else if (bases[q] == Basis::Y) apply_gate(rotated, Gate::rx(q, kPi / 2));
  }

  const std::size_t dim = rotated.dim();
  std::vector<double> cdf(dim);
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    acc += std::norm(rotated[i]);
    cdf[i] = acc;
  }
  const double total = acc;

  Rng rng(rng_seed);
  std::vector<ShotRecord> records;
  records.reserve(static_cast<std::size_t>(n_shots));
  for (int s = 0; s < n_shots; ++s) {
    const double u = rng.next_double() * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= dim) idx = dim - 1;
    ShotRecord rec;
    rec.bits.resize(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      rec.bits[static_cast<std::size_t>(q)] =
          static_cast<std::uint8_t>((idx >> (n - 1 - q)) & 1u);
    }
    rec.bases = bases;
    records.push_back(std::move(rec));
  }
  return records;
}

std::string circuit_to_text(const Circuit& c) {
  std::ostringstream out;
  out << "QUBITS " << c.n_qubits << "\n";
  char buf[64];
  for (const auto& g : c.gates) {
    out << to_string(g.kind) << ' ' << g.q0;
    if (g.two_qubit()) out << ' ' << g.q1;
    if (g.parameterized()) {
      std::snprintf(buf, sizeof buf, "%.17g", g.theta);
      out << ' ' << buf;
    }
    out << "\n";
  }
  return out.str();
}

Circuit circuit_from_text(std::istream& in) {
  std::string line;
  Circuit c;
  bool have_header = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!have_header) {
      if (tok != "QUBITS") throw ConfigError("circuit text must start with a QUBITS line");
      if (!(ls >> c.n_qubits) || c.n_qubits < 1) throw ConfigError("bad QUBITS line");
      have_header = true;
      continue;
    }
    Gate g;
    g.kind = gate_kind_from_string(tok);
    if (!(ls >> g.q0)) throw ConfigError("missing target in line: " + line);
    if (is_two_qubit_kind(g.kind)) {
      if (!(ls >> g.q1)) throw ConfigError("missing second target in line: " + line);
    }
    if (g.parameterized()) {
      if (!(ls >> g.theta)) throw ConfigError("missing angle in line: " + line);
    }
    c.add(g);
  }
  if (!have_header) throw ConfigError("empty circuit text");
  return c;
}

Circuit circuit_from_text(const std::string& text) {
  std::istringstream in(text);
  return circuit_from_text(in);
}

}  // namespace pfz
