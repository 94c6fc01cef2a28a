// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include "pfz/leeyang.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pfz/errors.hpp"
#include "pfz/hamiltonian.hpp"
#include "pfz/tfd.hpp"
#include "pfz/util.hpp"

namespace pfz {

std::vector<Gate> coupling_gates(int n_sites, double theta) {
  std::vector<Gate> gates;
  gates.reserve(static_cast<std::size_t>(2 * n_sites));
  const int anc = 2 * n_sites;
  for (int i = 0; i < n_sites; ++i) {
    gates.push_back(Gate::crz(anc, i, -2.0 * theta));
    gates.push_back(Gate::rz(i, theta));
  }
  return gates;
}

Circuit protocol_circuit(int n_sites, double theta, Basis readout) {
  Circuit c(2 * n_sites + 1);
  const int anc = 2 * n_sites;
  c.add(Gate::h(anc));
  for (const Gate& g : coupling_gates(n_sites, theta)) c.add(g);
  switch (readout) {
    case Basis::X:
      c.add(Gate::ry(anc, -0.5 * kPi));
      break;
    case Basis::Y:
      c.add(Gate::rx(anc, 0.5 * kPi));
      break;
    case Basis::Z:
    default:
      throw ConfigError("protocol_circuit: readout basis must be X or Y");
  }
  return c;
}

StateVector attach_ancilla(const StateVector& prep) {
  const int n = prep.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  VecC amps = VecC::Zero(static_cast<Eigen::Index>(dim << 1));
  const cplx* src = prep.data();
  // The new ancilla is the highest-indexed qubit and therefore bit 0.
  for (std::size_t i = 0; i < dim; ++i) amps[static_cast<Eigen::Index>(i << 1)] = src[i];
  return StateVector::from_amplitudes(n + 1, amps);
}

cplx ancilla_coherence(const StateVector& state) {
  const std::size_t dim = std::size_t{1} << state.n_qubits();
  const cplx* a = state.data();
  double re = 0.0, im = 0.0;
  for (std::size_t g = 0; g < dim; g += 2) {
    const cplx w = std::conj(a[g]) * a[g + 1];
    re += 2.0 * w.real();
    im += 2.0 * w.imag();
  }
  // <sx> - i <sy> = 2 <s-> picks out Tr[rho e^{-i theta M}].
  return cplx(re, -im);
}

cplx protocol_coherence(const StateVector& prepped, int n_sites, double theta) {
  if (prepped.n_qubits() != 2 * n_sites + 1) {
    throw LayoutMismatch("protocol_coherence: state must cover 2N+1 qubits");
  }
  StateVector state = prepped;
  const int anc = 2 * n_sites;
  apply_gate(state, Gate::h(anc));
  for (const Gate& g : coupling_gates(n_sites, theta)) apply_gate(state, g);
  return ancilla_coherence(state);
}

std::vector<double> default_theta_grid(int n_points, double lo, double hi) {
  if (n_points < 2) throw ConfigError("default_theta_grid: need at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n_points - 1);
  }
  return grid;
}

CoherenceTrace sweep_coherence(const MatC& H_s, const SweepSpec& spec) {
  if (spec.n_sites < 1) throw ConfigError("sweep_coherence: need n_sites >= 1");
  if (!(spec.beta > 0.0)) throw ConfigError("sweep_coherence: need beta > 0");
  const Eigen::Index dim = Eigen::Index{1} << spec.n_sites;
  if (H_s.rows() != dim) {
    throw ConfigError("sweep_coherence: Hamiltonian dimension does not match n_sites");
  }
  if (spec.mode == PrepMode::ExactState && spec.noise.has_value()) {
    throw ConfigError("sweep_coherence: the noise model requires circuit preparation");
  }

  const std::vector<double> thetas =
      spec.theta_values.empty() ? default_theta_grid() : spec.theta_values;
  const int anc = 2 * spec.n_sites;

  StateVector prepped = [&]() {
    if (spec.mode == PrepMode::ExactState) {
      MatC H0 = H_s;
      if (spec.h_r != 0.0) {
        H0 += spec.h_r * build_magnetization(spec.n_sites);
      }
      return attach_ancilla(exact_tfd(H0, spec.beta, spec.n_sites));
    }
    Circuit prep = build_tfd_circuit(spec.n_sites, spec.n_layers, spec.ansatz_angles);
    Circuit lifted(anc + 1);
    for (const Gate& g : prep.gates) lifted.add(g);
    if (spec.noise.has_value()) lifted = apply_noise(lifted, *spec.noise);
    return run_circuit(lifted);
  }();

  CoherenceTrace trace;
  trace.n_sites = spec.n_sites;
  trace.beta = spec.beta;
  trace.h_r = spec.h_r;
  trace.points.resize(thetas.size());

  for (std::size_t idx = 0; idx < thetas.size(); ++idx) {
    CoherencePoint& pt = trace.points[idx];
    pt.theta = thetas[idx];
    if (spec.n_shots <= 0) {
      pt.L = protocol_coherence(prepped, spec.n_sites, pt.theta);
      continue;
    }

    std::vector<Basis> bases(static_cast<std::size_t>(anc + 1), Basis::Z);
    std::vector<ShotRecord> shots;
    std::size_t n_input = 0;
    for (int comp = 0; comp < 2; ++comp) {
      const Basis readout = comp == 0 ? Basis::X : Basis::Y;
      bases[static_cast<std::size_t>(anc)] = readout;
      StateVector state = prepped;
      apply_gate(state, Gate::h(anc));
      for (const Gate& g : coupling_gates(spec.n_sites, pt.theta)) apply_gate(state, g);
      // sample_shots applies the X/Y basis change itself, keyed on `bases`.
      std::vector<ShotRecord> batch = sample_shots(
          state, bases, spec.n_shots,
          derive_seed(spec.seed, 2 * static_cast<std::uint64_t>(idx) + comp));
      n_input += batch.size();
      PostselectStats stats;
      std::vector<ShotRecord> kept = postselect(batch, spec.n_sites, spec.postselect, &stats);
      shots.insert(shots.end(), kept.begin(), kept.end());
    }
    const CoherenceEstimate est = estimate_coherence(shots, anc);
    pt.L = est.value;
    pt.stderr_re = est.stderr_re;
    pt.stderr_im = est.stderr_im;
    pt.n_re = est.n_re;
    pt.n_im = est.n_im;
    pt.retention = n_input == 0 ? 1.0
                                : static_cast<double>(shots.size()) /
                                      static_cast<double>(n_input);
  }
  return trace;
}

ZeroSet find_zeros(const CoherenceTrace& trace, double threshold) {
  ZeroSet zs;
  zs.plane = Plane::FieldH;
  zs.provenance = Provenance::CircuitSweep;
  zs.convention = FugacityConvention::ZPlus2BetaH;
  const std::vector<CoherencePoint>& pts = trace.points;
  if (pts.size() < 2) return zs;

  std::vector<double> xs(pts.size());
  std::vector<cplx> ls(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    xs[i] = pts[i].theta;
    ls[i] = pts[i].L;
  }
  for (double t : zero_candidates_1d(xs, ls, threshold)) {
    zs.zeros.emplace_back(trace.h_r, t / trace.beta);
  }
  return zs;
}

CoherenceGrid scan_plane(const MatC& H_s, double beta, int n_sites,
                         const std::vector<double>& hr_values,
                         const std::vector<double>& theta_values) {
  if (hr_values.empty() || theta_values.empty()) {
    throw ConfigError("scan_plane: empty grid axis");
  }
  const MatC M = build_magnetization(n_sites);
  const int anc = 2 * n_sites;

  std::vector<std::size_t> order(theta_values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return theta_values[a] < theta_values[b];
  });

  CoherenceGrid grid;
  grid.xs = hr_values;
  grid.ys = theta_values;
  grid.plane = Plane::FieldH;
  grid.L.resize(static_cast<Eigen::Index>(theta_values.size()),
                static_cast<Eigen::Index>(hr_values.size()));

  for (std::size_t ix = 0; ix < hr_values.size(); ++ix) {
    MatC H0 = H_s + hr_values[ix] * M;
    StateVector state = attach_ancilla(exact_tfd(H0, beta, n_sites));
    apply_gate(state, Gate::h(anc));
    double cur = 0.0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const std::size_t iy = order[pos];
      const double delta = theta_values[iy] - cur;
      if (delta != 0.0) {
        for (const Gate& g : coupling_gates(n_sites, delta)) apply_gate(state, g);
        cur = theta_values[iy];
      }
      grid.L(static_cast<Eigen::Index>(iy), static_cast<Eigen::Index>(ix)) =
          ancilla_coherence(state);
    }
  }
  return grid;
}

}  // namespace pfz
