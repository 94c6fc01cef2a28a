// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include "pfz/tfd.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "pfz/errors.hpp"
#include "pfz/exact.hpp"
#include "pfz/optim.hpp"
#include "pfz/util.hpp"

namespace pfz {

StateVector exact_tfd(const MatC& H_s, double beta, int n_sites) {
  if (n_sites < 1 || n_sites > 12) {
    throw ConfigError("exact_tfd: n_sites out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_sites;
  if (H_s.rows() != dim) {
    throw ConfigError("exact_tfd: Hamiltonian dimension does not match n_sites");
  }
  Eigensystem es = diagonalize(H_s);
  const double e0 = es.evals.minCoeff();
  VecD w(dim);
  for (Eigen::Index n = 0; n < dim; ++n) w[n] = std::exp(-0.5 * beta * (es.evals[n] - e0));
  // (e^{-beta H/2} x I) sum_b |b>_A |b>_B, chain A on the high bits.
  MatC half = es.evecs * w.asDiagonal() * es.evecs.adjoint();
  VecC amps(dim * dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) amps[a * dim + b] = half(a, b);
  }
  StateVector state = StateVector::from_amplitudes(2 * n_sites, amps);
  state.normalize();
  return state;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ConfigError("fidelity: qubit counts differ");
  }
  cplx overlap = 0.0;
  const cplx* pa = a.data();
  const cplx* pb = b.data();
  const std::size_t dim = std::size_t{1} << a.n_qubits();
  for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(pa[i]) * pb[i];
  return std::norm(overlap);
}

namespace {

void add_pair_gates(Circuit& c, int n, double theta_c, double theta_d) {
  for (int i = 0; i < n; ++i) c.add(Gate::zz(i, n + i, theta_c));
  for (int i = 0; i < n; ++i) c.add(Gate::xx(i, n + i, theta_d));
}

void add_layer_2site(Circuit& c, double a, double b, double zc, double d) {
  c.add(Gate::xx(0, 1, a));
  c.add(Gate::xx(2, 3, a));
  c.add(Gate::yy(0, 1, a));
  c.add(Gate::yy(2, 3, a));
  for (int q = 0; q < 4; ++q) c.add(Gate::rz(q, b));
  c.add(Gate::swap(1, 2));
  c.add(Gate::zz(0, 1, zc));
  c.add(Gate::zz(2, 3, zc));
  c.add(Gate::xx(0, 1, d));
  c.add(Gate::xx(2, 3, d));
  c.add(Gate::swap(1, 2));
}

void add_layer_general(Circuit& c, int n, double a, double b, double zc, double d) {
  for (int off : {0, n}) {
    for (int parity = 0; parity < 2; ++parity) {
      for (int i = parity; i + 1 < n; i += 2) {
        c.add(Gate::xx(off + i, off + i + 1, a));
        c.add(Gate::yy(off + i, off + i + 1, a));
      }
    }
    if (n > 2) {
      c.add(Gate::xx(off + n - 1, off + 0, a));
      c.add(Gate::yy(off + n - 1, off + 0, a));
    }
  }
  for (int q = 0; q < 2 * n; ++q) c.add(Gate::rz(q, b));
  add_pair_gates(c, n, zc, d);
}

}  // namespace

Circuit build_tfd_circuit(int n_sites, int n_layers, const std::vector<double>& angles) {
  if (n_sites < 2) throw ConfigError("build_tfd_circuit: need n_sites >= 2");
  if (n_layers < 0) throw ConfigError("build_tfd_circuit: need n_layers >= 0");
  if (angles.size() != static_cast<std::size_t>(4 * n_layers)) {
    throw AngleCountMismatch("build_tfd_circuit: expected " + std::to_string(4 * n_layers) +
                             " angles, got " + std::to_string(angles.size()));
  }
  Circuit c(2 * n_sites);
  for (int i = 0; i < n_sites; ++i) c.add(Gate::h(i));
  for (int i = 0; i < n_sites; ++i) c.add(Gate::cnot(i, n_sites + i));
  for (int layer = 0; layer < n_layers; ++layer) {
    const std::size_t o = static_cast<std::size_t>(4 * layer);
    if (n_sites == 2) {
      add_layer_2site(c, angles[o], angles[o + 1], angles[o + 2], angles[o + 3]);
    } else {
      add_layer_general(c, n_sites, angles[o], angles[o + 1], angles[o + 2], angles[o + 3]);
    }
  }
  return c;
}

TfdResult optimize_tfd(const MatC& H_s, double beta, int n_sites, const TfdOptions& options) {
  if (options.n_layers < 1) throw ConfigError("optimize_tfd: need n_layers >= 1");
  if (options.n_restarts < 1) throw ConfigError("optimize_tfd: need n_restarts >= 1");
  const StateVector target = exact_tfd(H_s, beta, n_sites);
  const std::size_t n_angles = static_cast<std::size_t>(4 * options.n_layers);

  int total_evals = 0;
  ObjectiveFn objective = [&](const std::vector<double>& angles) {
    StateVector state = run_circuit(build_tfd_circuit(n_sites, options.n_layers, angles));
    return 1.0 - fidelity(state, target);
  };

  TfdResult best;
  best.fidelity = -1.0;
  for (int r = 0; r < options.n_restarts; ++r) {
    std::vector<double> x0(n_angles, 0.0);
    if (r > 0) {
      Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
      for (double& v : x0) v = rng.uniform(-1.5, 1.5);
    }
    OptimResult res;
    if (options.optimizer == OptimizerKind::NelderMead) {
      NelderMeadOptions nm;
      nm.max_iter = options.max_iter;
      res = nelder_mead(objective, x0, nm);
    } else {
      CoordinateDescentOptions cd;
      cd.max_cycles = std::max(1, options.max_iter / 10);
      cd.span = 1.5;
      res = coordinate_descent(objective, x0, cd);
    }
    total_evals += res.evaluations;
    const double fid = 1.0 - res.value;
    if (fid > best.fidelity) {
      best.angles = res.x;
      best.fidelity = fid;
      best.converged = res.converged || fid >= options.target_fidelity;
    }
    if (best.fidelity >= options.target_fidelity) break;
  }
  best.evaluations = total_evals;
  if (best.fidelity >= options.target_fidelity) best.converged = true;
  return best;
}

const std::vector<ReferenceAnsatz>& reference_ansatz_bank() {
  static const std::vector<ReferenceAnsatz> bank = {
      {0.90, -1.0, 10.0, 0.0,
       {-0.409, -1.570, -0.480, -1.660, -0.395, -1.570, -0.739, -1.178}},
      {0.96, -1.0, 10.0, 0.0,
       {-1.178, -0.784, -0.555, -1.427, -1.092, -0.784, -0.694, 0.360}},
      {1.03, -1.0, 10.0, 0.0,
       {-0.993, -1.570, -1.014, -1.210, -1.060, -1.570, -0.933, -0.392}},
      {1.06, -1.0, 10.0, 0.0546820354,
       {-0.922, -2.972, -0.438, -0.887, -0.678, -2.892, -0.624, -1.165}},
      {1.15, -1.0, 10.0, 0.1498755990,
       {-0.958, -1.896, -1.008, -1.133, -0.752, -1.506, -0.590, -1.187}},
      {1.20, -1.0, 10.0, 0.1999832184,
       {-0.972, -1.936, -0.990, -1.163, -0.772, -1.544, -0.589, -1.182}},
  };
  return bank;
}

const ReferenceAnsatz* find_reference_ansatz(double j) {
  for (const ReferenceAnsatz& entry : reference_ansatz_bank()) {
    if (std::abs(entry.j - j) < 1e-12) return &entry;
  }
  return nullptr;
}

}  // namespace pfz
