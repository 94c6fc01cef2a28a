// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <vector>

#include "pfz/types.hpp"

namespace pfz {

// From the factorization Z(h) = e^{-beta N h} p_N prod_j (z(h) - z_j) with
// z(h) = e^{+2 beta h} (or the mirrored form for the e^{-2 beta h}
// convention), the free energy on the real axis is
//   F(h) = N h - (1/beta) [ln p_N + sum_j ln(z(h) - z_j)].

struct CompletionOptions {
  // When positive, a zero whose theta = beta h_i lies within this tolerance
  // of pi/2 is snapped onto pi/2 before mapping, collapsing near-degenerate
  // sweep estimates onto the negative real fugacity axis.
  double snap_theta_tol = 0.0;
  // Close the set under complex conjugation (greedy pairing with averaging;
  // unpaired zeros get an appended conjugate).
  bool add_conjugates = true;
  // Relative radius used for deduplication and conjugate pairing.
  double merge_tol = 1e-7;
};

// Maps field-plane zeros to the fugacity plane and enforces the closure
// properties a real-coefficient polynomial demands.
ZeroSet complete_zeros(const ZeroSet& field_zeros, double beta,
                       const CompletionOptions& options = {});

// F(h) over real fields h_values.  `ln_prefactor` is ln p_N (log form keeps
// large-beta prefactors finite).  Throws PlaneMismatch unless the zeros are
// fugacity-plane, and NonPositivePartition when the reconstructed Z stops
// being positive real (relative imaginary part above 1e-6 or Re Z <= 0).
std::vector<double> reconstruct_free_energy(const ZeroSet& fugacity_zeros,
                                            double ln_prefactor, double beta,
                                            int n_sites,
                                            const std::vector<double>& h_values);

// Least-squares fit of ln p_N against reference samples (h_values[i],
// f_reference[i]) when the prefactor is not known; the offset enters
// linearly, so the fit is closed-form.
double fit_prefactor_offset(const ZeroSet& fugacity_zeros, double beta, int n_sites,
                            const std::vector<double>& h_values,
                            const std::vector<double>& f_reference);

}  // namespace pfz
