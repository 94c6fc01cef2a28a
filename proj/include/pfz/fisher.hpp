// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <cstdint>
#include <vector>

#include "pfz/circuit.hpp"
#include "pfz/exact.hpp"
#include "pfz/hamiltonian.hpp"
#include "pfz/types.hpp"

namespace pfz {

// Complex-temperature interferometry: with the chain prepared thermally at
// beta_r (purified on 2N qubits; beta_r = 0 is the maximally mixed state,
// negative beta_r is allowed) and the ancilla coupled through
// exp(-i (beta_i / 2) sz_anc x H), the tomography combination
// <sx_anc> - i <sy_anc> equals L = Z(beta_r + i beta_i) / Z(beta_r).

struct HamTerm {
  enum class Kind { XX, YY, ZZ, Z };
  Kind kind = Kind::Z;
  int q0 = 0;
  int q1 = -1;  // unused for Kind::Z
  double coeff = 0.0;
};

// Structured term list of the chain described by `spec`, mirroring the dense
// builder bond for bond.  Throws UnsupportedTerm for the string-boundary
// chain, whose boundary term is more than 2-local.
std::vector<HamTerm> chain_terms(const SpinChainSpec& spec);

// Gates for exp(-i (lambda / 2) sz_anc x coeff * P) appended in place; the
// two-site kinds conjugate a controlled-ZZ phase block into the right basis.
void append_controlled_term(Circuit& c, int anc, const HamTerm& term, double lambda);

struct TrotterConfig {
  enum class Order { FirstOrder, SecondOrderSymmetric };
  int n_steps = 16;
  Order order = Order::SecondOrderSymmetric;
};

// Trotterized exp(-i (lambda / 2) sz_anc x H) over the term list.
void append_controlled_evolution(Circuit& c, int anc, const std::vector<HamTerm>& terms,
                                 double lambda, const TrotterConfig& config);

// Exact controlled evolution applied to a 2N+1 state (ancilla = qubit 2N),
// using the eigendecomposition of the chain Hamiltonian on subsystem A.
void apply_controlled_exact(StateVector& state, int n_sites, const Eigensystem& es,
                            double lambda);

struct FisherPoint {
  double beta_i = 0.0;
  cplx L;
};

struct FisherTrace {
  int n_sites = 0;
  double beta_r = 0.0;
  std::vector<FisherPoint> points;
};

// Protocol sweep with the controlled evolution applied exactly.
FisherTrace fisher_sweep_exact(const MatC& H, int n_sites, double beta_r,
                               const std::vector<double>& betai_values);

// Protocol sweep with the Trotterized controlled evolution; the thermal
// preparation itself is exact.
FisherTrace fisher_sweep_trotter(const SpinChainSpec& spec, double beta_r,
                                 const std::vector<double>& betai_values,
                                 const TrotterConfig& config);

// Zero candidates mapped to beta = beta_r + i beta_i.
ZeroSet find_fisher_zeros(const FisherTrace& trace, double threshold = 0.05);

}  // namespace pfz
