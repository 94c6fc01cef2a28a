// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include "pfz/fisher.hpp"

#include <cmath>

#include "pfz/errors.hpp"
#include "pfz/leeyang.hpp"
#include "pfz/tfd.hpp"
#include "pfz/util.hpp"

namespace pfz {

std::vector<HamTerm> chain_terms(const SpinChainSpec& spec) {
  if (spec.boundary == Boundary::JwBoundary) {
    throw UnsupportedTerm("chain_terms: the string boundary term is not 2-local");
  }
  if (spec.n_sites < 1) throw ConfigError("chain_terms: need n_sites >= 1");
  std::vector<HamTerm> terms;
  auto add_bond = [&](int a, int b) {
    if (spec.coupling_xy != 0.0) {
      terms.push_back({HamTerm::Kind::XX, a, b, spec.coupling_xy});
      terms.push_back({HamTerm::Kind::YY, a, b, spec.coupling_xy});
    }
    if (spec.coupling_z != 0.0) {
      terms.push_back({HamTerm::Kind::ZZ, a, b, spec.coupling_z});
    }
  };
  for (int i = 0; i + 1 < spec.n_sites; ++i) add_bond(i, i + 1);
  if (spec.boundary == Boundary::Periodic && spec.n_sites >= 3) {
    add_bond(spec.n_sites - 1, 0);
  }
  if (spec.field_real != 0.0) {
    for (int i = 0; i < spec.n_sites; ++i) {
      terms.push_back({HamTerm::Kind::Z, i, -1, spec.field_real});
    }
  }
  return terms;
}

namespace {

// exp(-i (phi/2) sz_anc x sz_target) as CRz plus Rz.
void controlled_z_phase(Circuit& c, int anc, int target, double phi) {
  c.add(Gate::crz(anc, target, -2.0 * phi));
  c.add(Gate::rz(target, phi));
}

void controlled_zz_phase(Circuit& c, int anc, int i, int j, double phi) {
  c.add(Gate::cnot(i, j));
  controlled_z_phase(c, anc, j, phi);
  c.add(Gate::cnot(i, j));
}

}  // namespace

void append_controlled_term(Circuit& c, int anc, const HamTerm& term, double lambda) {
  const double phi = lambda * term.coeff;
  switch (term.kind) {
    case HamTerm::Kind::Z:
      controlled_z_phase(c, anc, term.q0, phi);
      break;
    case HamTerm::Kind::ZZ:
      controlled_zz_phase(c, anc, term.q0, term.q1, phi);
      break;
    case HamTerm::Kind::XX:
      c.add(Gate::h(term.q0));
      c.add(Gate::h(term.q1));
      controlled_zz_phase(c, anc, term.q0, term.q1, phi);
      c.add(Gate::h(term.q0));
      c.add(Gate::h(term.q1));
      break;
    case HamTerm::Kind::YY:
      c.add(Gate::rx(term.q0, 0.5 * kPi));
      c.add(Gate::rx(term.q1, 0.5 * kPi));
      controlled_zz_phase(c, anc, term.q0, term.q1, phi);
      c.add(Gate::rx(term.q0, -0.5 * kPi));
      c.add(Gate::rx(term.q1, -0.5 * kPi));
      break;
  }
}

void append_controlled_evolution(Circuit& c, int anc, const std::vector<HamTerm>& terms,
                                 double lambda, const TrotterConfig& config) {
  if (config.n_steps < 1) throw ConfigError("append_controlled_evolution: need n_steps >= 1");
  const double step = lambda / config.n_steps;
  for (int s = 0; s < config.n_steps; ++s) {
    if (config.order == TrotterConfig::Order::FirstOrder) {
      for (const HamTerm& t : terms) append_controlled_term(c, anc, t, step);
    } else {
      for (const HamTerm& t : terms) append_controlled_term(c, anc, t, 0.5 * step);
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        append_controlled_term(c, anc, *it, 0.5 * step);
      }
    }
  }
}

void apply_controlled_exact(StateVector& state, int n_sites, const Eigensystem& es,
                            double lambda) {
  const int n = state.n_qubits();
  if (n != 2 * n_sites + 1) {
    throw LayoutMismatch("apply_controlled_exact: state must cover 2N+1 qubits");
  }
  const Eigen::Index dim_a = Eigen::Index{1} << n_sites;
  if (es.evals.size() != dim_a) {
    throw ConfigError("apply_controlled_exact: eigensystem dimension mismatch");
  }
  VecC fwd(dim_a), bwd(dim_a);
  for (Eigen::Index k = 0; k < dim_a; ++k) {
    fwd[k] = std::exp(cplx(0.0, -0.5 * lambda * es.evals[k]));
    bwd[k] = std::conj(fwd[k]);
  }
  const MatC u0 = es.evecs * fwd.asDiagonal() * es.evecs.adjoint();
  const MatC u1 = es.evecs * bwd.asDiagonal() * es.evecs.adjoint();

  const std::size_t rest = std::size_t{1} << (n_sites + 1);  // B half plus ancilla
  cplx* amps = state.data();
  VecC col(dim_a);
  for (std::size_t r = 0; r < rest; ++r) {
    for (Eigen::Index a = 0; a < dim_a; ++a) {
      col[a] = amps[static_cast<std::size_t>(a) * rest + r];
    }
    const VecC out = ((r & 1u) ? u1 : u0) * col;
    for (Eigen::Index a = 0; a < dim_a; ++a) {
      amps[static_cast<std::size_t>(a) * rest + r] = out[a];
    }
  }
}

namespace {

StateVector prepare_equator(const MatC& H, int n_sites, double beta_r) {
  StateVector state = attach_ancilla(exact_tfd(H, beta_r, n_sites));
  apply_gate(state, Gate::h(2 * n_sites));
  return state;
}

}  // namespace

FisherTrace fisher_sweep_exact(const MatC& H, int n_sites, double beta_r,
                               const std::vector<double>& betai_values) {
  const Eigensystem es = diagonalize(H);
  const StateVector base = prepare_equator(H, n_sites, beta_r);
  FisherTrace trace;
  trace.n_sites = n_sites;
  trace.beta_r = beta_r;
  trace.points.reserve(betai_values.size());
  for (double bi : betai_values) {
    StateVector state = base;
    apply_controlled_exact(state, n_sites, es, bi);
    trace.points.push_back({bi, ancilla_coherence(state)});
  }
  return trace;
}

FisherTrace fisher_sweep_trotter(const SpinChainSpec& spec, double beta_r,
                                 const std::vector<double>& betai_values,
                                 const TrotterConfig& config) {
  const MatC H = build_xxz(spec);
  const std::vector<HamTerm> terms = chain_terms(spec);
  const int anc = 2 * spec.n_sites;
  const StateVector base = prepare_equator(H, spec.n_sites, beta_r);
  FisherTrace trace;
  trace.n_sites = spec.n_sites;
  trace.beta_r = beta_r;
  trace.points.reserve(betai_values.size());
  for (double bi : betai_values) {
    Circuit evolution(anc + 1);
    append_controlled_evolution(evolution, anc, terms, bi, config);
    StateVector state = base;
    for (const Gate& g : evolution.gates) apply_gate(state, g);
    trace.points.push_back({bi, ancilla_coherence(state)});
  }
  return trace;
}

ZeroSet find_fisher_zeros(const FisherTrace& trace, double threshold) {
  ZeroSet zs;
  zs.plane = Plane::InverseTemperature;
  zs.provenance = Provenance::CircuitSweep;
  zs.convention = FugacityConvention::ZPlus2BetaH;
  if (trace.points.size() < 2) return zs;
  std::vector<double> xs(trace.points.size());
  std::vector<cplx> ls(trace.points.size());
  for (std::size_t i = 0; i < trace.points.size(); ++i) {
    xs[i] = trace.points[i].beta_i;
    ls[i] = trace.points[i].L;
  }
  for (double b : zero_candidates_1d(xs, ls, threshold)) {
    zs.zeros.emplace_back(trace.beta_r, b);
  }
  return zs;
}

}  // namespace pfz
