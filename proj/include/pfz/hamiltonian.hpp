// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <iosfwd>
#include <string>

#include "pfz/types.hpp"

namespace pfz {

enum class Boundary { Periodic, Open, JwBoundary };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

// XXZ chain model definition:
//   H_s = sum_bonds [ J (sx sx + sy sy) + J_z (sz sz) ],  H_0 = H_s + h_r M
// with M = sum_i sz_i.  Periodic chains with n_sites = 2 contribute the
// single (0,1) bond exactly once.
struct SpinChainSpec {
  int n_sites = 1;
  double coupling_xy = 0.0;  // J
  double coupling_z = 0.0;   // J_z
  double field_real = 0.0;   // h_r
  Boundary boundary = Boundary::Periodic;
};

inline constexpr int kDefaultMaxSites = 14;

// Dense H_0 = H_s + h_r * M in the sigma_z product basis (qubit 0 = MSB).
MatC build_xxz(const SpinChainSpec& spec, int max_sites = kDefaultMaxSites);

// Diagonal magnetization operator M = sum_i sz_i.
MatC build_magnetization(int n_sites, int max_sites = kDefaultMaxSites);

// XY chain with the special boundary term that closes the chain without a
// fermionic string:
//   H = J sum_{i<N-1} (sx sx + sy sy) + 2J (s+_1 sz ... sz s-_N + h.c.)
// Its spectrum is the free-fermion fillings of 4J cos(2 pi k / N).  Any
// field_real is added as h_r * M.
MatC build_xy_jw_boundary(const SpinChainSpec& spec, int max_sites = kDefaultMaxSites);

// Classical Ising ring H = J_z sum_{i=0}^{N-1} sz_i sz_{i+1 mod N} with all N
// ring bonds counted, so N = 2 carries a doubled bond.  This is the
// transfer-matrix convention the closed-form Ising zeros assume; it differs
// from build_xxz(Periodic, n=2) which counts that bond once.
MatC build_ising_ring(int n_sites, double j_z, int max_sites = kDefaultMaxSites);

// Key-value config (keys: n_sites, j, jz, hr, boundary).
SpinChainSpec spec_from_config(std::istream& in);
SpinChainSpec spec_from_config_string(const std::string& text);
std::string spec_to_config(const SpinChainSpec& spec);

}  // namespace pfz
