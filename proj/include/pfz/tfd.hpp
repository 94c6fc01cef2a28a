// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <cstdint>
#include <vector>

#include "pfz/circuit.hpp"
#include "pfz/types.hpp"

namespace pfz {

// Thermofield-double preparation on 2N qubits: chain A on qubits 0..N-1,
// replica B on qubits N..2N-1, Bell pairing (i, N+i).

// Exact purification (e^{-beta H_s / 2} x I) |Bell pairs>, normalized.
StateVector exact_tfd(const MatC& H_s, double beta, int n_sites);

// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

// Variational TFD circuit.  Angles are consumed 4 per layer as
// (theta_a, theta_b, theta_c, theta_d):
//   theta_a: XX and YY on intra-chain bonds of A and of B,
//   theta_b: Rz on every qubit,
//   theta_c: ZZ on the Bell pairs (i, N+i),
//   theta_d: XX on the Bell pairs.
// For n_sites = 2 the inter-chain gates are routed through SWAP(1, 2) so the
// circuit uses nearest-neighbor two-qubit gates only.  Throws
// AngleCountMismatch unless angles.size() == 4 * n_layers.
Circuit build_tfd_circuit(int n_sites, int n_layers, const std::vector<double>& angles);

enum class OptimizerKind { NelderMead, CoordinateDescent };

struct TfdOptions {
  int n_layers = 2;
  OptimizerKind optimizer = OptimizerKind::NelderMead;
  int n_restarts = 8;
  std::uint64_t seed = 12345;
  int max_iter = 4000;
  double target_fidelity = 1.0 - 1e-8;  // stop restarts once reached
};

struct TfdResult {
  std::vector<double> angles;
  double fidelity = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Maximizes |<circuit(angles)|TFD(beta)>|^2.  Restart 0 starts from zero
// angles; later restarts draw uniformly from [-1.5, 1.5] with per-restart
// seeds derived from options.seed.  Never throws on failure to converge;
// inspect `converged`.
TfdResult optimize_tfd(const MatC& H_s, double beta, int n_sites,
                       const TfdOptions& options = {});

// Pre-tuned two-layer, two-site angle sets (beta = 10, J_z = -1).  XY-like
// entries target the TFD of H_s + h_r * M; `h_r` records that offset.
struct ReferenceAnsatz {
  double j = 0.0;
  double j_z = -1.0;
  double beta = 10.0;
  double h_r = 0.0;
  std::vector<double> angles;  // 8 values, two layers
};

const std::vector<ReferenceAnsatz>& reference_ansatz_bank();
// nullptr when no entry matches |j - entry.j| < 1e-12.
const ReferenceAnsatz* find_reference_ansatz(double j);

}  // namespace pfz
