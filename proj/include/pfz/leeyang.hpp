// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pfz/circuit.hpp"
#include "pfz/exact.hpp"
#include "pfz/noise.hpp"
#include "pfz/postselect.hpp"
#include "pfz/types.hpp"
#include "pfz/util.hpp"

namespace pfz {

// Ancilla-probe protocol on 2N+1 qubits (ancilla = qubit 2N): the ancilla is
// placed on the equator and picks up a phase e^{+i theta m_A} on its |1>
// branch relative to |0>, so L(theta) = <sx_anc> - i <sy_anc> equals
// Tr[rho e^{-i theta M_A}].

// Coupling exp(-i (theta/2) sz_anc x M_A), compiled as CRz(anc -> i, -2 theta)
// followed by Rz(i, theta) on every chain-A qubit.
std::vector<Gate> coupling_gates(int n_sites, double theta);

// Full measurement block: H(anc), coupling, then the readout rotation
// (Ry(-pi/2) for Basis::X giving Re L, Rx(pi/2) for Basis::Y giving -Im L).
Circuit protocol_circuit(int n_sites, double theta, Basis readout);

// Lifts a 2N-qubit preparation onto the 2N+1 register with the ancilla in |0>.
StateVector attach_ancilla(const StateVector& prep);

// L(theta) for an already-prepared 2N+1 state with the ancilla still in |0>.
cplx protocol_coherence(const StateVector& prepped, int n_sites, double theta);

// <sx_anc> - i <sy_anc> of a state whose ancilla (highest-indexed qubit) is
// already coupled; equals the two-quadrature tomography combination.
cplx ancilla_coherence(const StateVector& state);

enum class PrepMode { ExactState, CircuitAnsatz };

struct SweepSpec {
  int n_sites = 2;
  double beta = 1.0;
  double h_r = 0.0;
  std::vector<double> theta_values;       // empty -> 41 uniform points on [0, pi]
  PrepMode mode = PrepMode::ExactState;
  int n_layers = 2;                       // circuit mode
  std::vector<double> ansatz_angles;      // circuit mode, 4 * n_layers values
  std::optional<NoiseModel> noise;        // circuit mode only
  int n_shots = 0;                        // 0 -> exact expectation values
  std::uint64_t seed = 2026;
  PostselectMethod postselect = PostselectMethod::None;
};

struct CoherencePoint {
  double theta = 0.0;
  cplx L;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  std::size_t n_re = 0;  // shots kept per basis; 0 in expectation mode
  std::size_t n_im = 0;
  double retention = 1.0;
};

struct CoherenceTrace {
  int n_sites = 0;
  double beta = 1.0;
  double h_r = 0.0;
  std::vector<CoherencePoint> points;
};

std::vector<double> default_theta_grid(int n_points = 41, double lo = 0.0,
                                       double hi = kPi);

// Runs the protocol across theta_values.  The thermal target is
// H_s + h_r * M; exact mode injects its purification directly, circuit mode
// prepares it with build_tfd_circuit(ansatz_angles) (optionally rewritten by
// the noise model) and reads the ancilla through the rotation circuits, with
// measurement sampling when n_shots > 0.
CoherenceTrace sweep_coherence(const MatC& H_s, const SweepSpec& spec);

// Zero candidates of a trace: sign changes of Re L refined by linear
// interpolation plus strict local minima of |L| refined by parabolic fit,
// both accepted only below `threshold`; mapped to h = h_r + i theta / beta.
ZeroSet find_zeros(const CoherenceTrace& trace, double threshold = 0.05);

// Protocol-driven |L| map over (h_r, theta) with exact preparation per
// column.  theta_values are swept incrementally, exploiting
// U(theta + d) = U(d) U(theta) for the coupling.
CoherenceGrid scan_plane(const MatC& H_s, double beta, int n_sites,
                         const std::vector<double>& hr_values,
                         const std::vector<double>& theta_values);

}  // namespace pfz
