// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <cstddef>
#include <vector>

#include "pfz/circuit.hpp"

namespace pfz {

// Error-mitigation filters on measured shots of the 2N+1 qubit protocol
// register: chain A on qubits 0..N-1, replica B on N..2N-1, ancilla last,
// chain qubits read in the Z basis.

enum class PostselectMethod { None, Method1, Method2 };

struct PostselectStats {
  std::size_t n_input = 0;
  std::size_t n_kept = 0;
  double retention() const {
    return n_input == 0 ? 1.0 : static_cast<double>(n_kept) / static_cast<double>(n_input);
  }
};

// Method 1: keep shots whose A and B halves carry equal magnetization
// (equal number of set bits).  The ideal protocol never violates this.
std::vector<ShotRecord> postselect_method1(const std::vector<ShotRecord>& shots,
                                           int n_sites, PostselectStats* stats = nullptr);

// Method 2: on real-part shots (ancilla read in X), discard outcomes with
// ancilla bit 1 and zero A magnetization; such events are impossible without
// noise.  Imaginary-part shots pass through.
std::vector<ShotRecord> postselect_method2(const std::vector<ShotRecord>& shots,
                                           int n_sites, PostselectStats* stats = nullptr);

std::vector<ShotRecord> postselect(const std::vector<ShotRecord>& shots, int n_sites,
                                   PostselectMethod method,
                                   PostselectStats* stats = nullptr);

struct CoherenceEstimate {
  cplx value;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  std::size_t n_re = 0;
  std::size_t n_im = 0;
};

// Re L = <sz_anc> over X-tagged shots, Im L = -<sz_anc> over Y-tagged shots.
// Throws EmptyAfterFiltering when either basis group is empty and
// LayoutMismatch when a shot's ancilla basis is Z.
CoherenceEstimate estimate_coherence(const std::vector<ShotRecord>& shots, int anc_qubit);

}  // namespace pfz
