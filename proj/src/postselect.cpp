// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include "pfz/postselect.hpp"

#include <cmath>

#include "pfz/errors.hpp"

namespace pfz {

namespace {

int ones_in_range(const ShotRecord& shot, int lo, int hi) {
  int c = 0;
  for (int q = lo; q < hi; ++q) c += shot.bits[static_cast<std::size_t>(q)];
  return c;
}

void check_layout(const ShotRecord& shot, int n_sites) {
  if (shot.bits.size() != static_cast<std::size_t>(2 * n_sites + 1) ||
      shot.bases.size() != shot.bits.size()) {
    throw LayoutMismatch("postselect: shot does not cover 2N+1 qubits");
  }
}

}  // namespace

std::vector<ShotRecord> postselect_method1(const std::vector<ShotRecord>& shots,
                                           int n_sites, PostselectStats* stats) {
  std::vector<ShotRecord> kept;
  kept.reserve(shots.size());
  for (const ShotRecord& shot : shots) {
    check_layout(shot, n_sites);
    if (ones_in_range(shot, 0, n_sites) == ones_in_range(shot, n_sites, 2 * n_sites)) {
      kept.push_back(shot);
    }
  }
  if (stats != nullptr) *stats = PostselectStats{shots.size(), kept.size()};
  return kept;
}

std::vector<ShotRecord> postselect_method2(const std::vector<ShotRecord>& shots,
                                           int n_sites, PostselectStats* stats) {
  std::vector<ShotRecord> kept;
  kept.reserve(shots.size());
  const int anc = 2 * n_sites;
  for (const ShotRecord& shot : shots) {
    check_layout(shot, n_sites);
    const bool re_basis = shot.bases[static_cast<std::size_t>(anc)] == Basis::X;
    const int m_a = n_sites - 2 * ones_in_range(shot, 0, n_sites);
    const bool bad = re_basis && shot.bits[static_cast<std::size_t>(anc)] == 1 && m_a == 0;
    if (!bad) kept.push_back(shot);
  }
  if (stats != nullptr) *stats = PostselectStats{shots.size(), kept.size()};
  return kept;
}

std::vector<ShotRecord> postselect(const std::vector<ShotRecord>& shots, int n_sites,
                                   PostselectMethod method, PostselectStats* stats) {
  switch (method) {
    case PostselectMethod::Method1:
      return postselect_method1(shots, n_sites, stats);
    case PostselectMethod::Method2:
      return postselect_method2(shots, n_sites, stats);
    case PostselectMethod::None:
    default:
      if (stats != nullptr) *stats = PostselectStats{shots.size(), shots.size()};
      return shots;
  }
}

CoherenceEstimate estimate_coherence(const std::vector<ShotRecord>& shots, int anc_qubit) {
  double sum_re = 0.0, sum_im = 0.0;
  std::size_t n_re = 0, n_im = 0;
  for (const ShotRecord& shot : shots) {
    if (anc_qubit < 0 || shot.bits.size() <= static_cast<std::size_t>(anc_qubit)) {
      throw LayoutMismatch("estimate_coherence: ancilla index outside shot record");
    }
    const double z = shot.bits[static_cast<std::size_t>(anc_qubit)] == 0 ? 1.0 : -1.0;
    switch (shot.bases[static_cast<std::size_t>(anc_qubit)]) {
      case Basis::X:
        sum_re += z;
        ++n_re;
        break;
      case Basis::Y:
        sum_im -= z;
        ++n_im;
        break;
      case Basis::Z:
      default:
        throw LayoutMismatch("estimate_coherence: ancilla must be read in X or Y");
    }
  }
  if (n_re == 0 || n_im == 0) {
    throw EmptyAfterFiltering("estimate_coherence: a basis group is empty");
  }
  const double mean_re = sum_re / static_cast<double>(n_re);
  const double mean_im = sum_im / static_cast<double>(n_im);
  auto stderr_of = [](double mean, std::size_t n) {
    if (n < 2) return 1.0;
    const double var = std::max(0.0, 1.0 - mean * mean) * static_cast<double>(n) /
                       static_cast<double>(n - 1);
    return std::sqrt(var / static_cast<double>(n));
  };
  CoherenceEstimate est;
  est.value = cplx(mean_re, mean_im);
  est.stderr_re = stderr_of(mean_re, n_re);
  est.stderr_im = stderr_of(mean_im, n_im);
  est.n_re = n_re;
  est.n_im = n_im;
  return est;
}

}  // namespace pfz
