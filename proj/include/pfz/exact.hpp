// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <utility>
#include <vector>

#include "pfz/types.hpp"

namespace pfz {

// Full eigendecomposition of a Hermitian operator.
struct Eigensystem {
  VecD evals;
  MatC evecs;  // columns are eigenvectors
};

// Throws if max |H - H^dagger| >= 1e-12.
void check_hermitian(const MatC& H, const char* what = "operator");

Eigensystem diagonalize(const MatC& H);

// Magnetization-sector decomposition of a Hamiltonian commuting with
// M = sum sz: eigenvalues plus, per eigenvector, its weight in each sector
// k (the subspace with n_down = k, magnetization N - 2k).  Projector masking
// keeps this exact even when degenerate eigenvectors mix sectors.
struct SectorWeights {
  int n_sites = 0;
  VecD evals;
  Eigen::MatrixXd weights;  // dim x (N+1); row n sums to 1
};

SectorWeights sector_weights(const MatC& H_s, int n_sites);

// p_k = Tr_{sector k} exp(-beta H_s), k = 0..N.  All p_k > 0.
std::vector<double> sector_traces(const SectorWeights& sw, double beta);
std::vector<double> sector_traces(const MatC& H_s, double beta, int n_sites);

cplx partition_function(const MatC& H, cplx beta);
double free_energy(const MatC& H, double beta);
MatC thermal_density_matrix(const MatC& H, double beta);

// L(theta) = Tr[exp(-beta H0 - i theta M)] / Tr[exp(-beta H0)].
// Requires [H0, M] = 0 (max-abs commutator < 1e-10); throws
// NonCommutingOperators otherwise.
cplx coherence_exact(const MatC& H0, const MatC& M, double beta, double theta);

// Roots of sum_k c_k z^k (real coefficients, c.size() = degree + 1) via the
// companion matrix with Newton polishing.  Throws IllConditionedPolynomial
// when any monic-form residual exceeds residual_tol relative to the
// evaluation scale sum_k |c_k / c_degree| |z|^k, or the leading coefficient
// vanishes.
std::vector<cplx> polynomial_roots(const std::vector<double>& coeffs,
                                   double residual_tol = 1e-6);

// Lee-Yang zeros as roots of Z(z) = sum_k p_k z^k, fugacity z = exp(+2 beta h).
ZeroSet leeyang_zeros_polynomial(const MatC& H_s, double beta, int n_sites,
                                 double residual_tol = 1e-6);

// Closed-form Lee-Yang zeros of the ferromagnetic Ising ring (J > 0,
// N ring bonds; see build_ising_ring with j_z = -J for the matching
// Hamiltonian).  All zeros lie on the unit circle.  Stated in the
// z = exp(-2 beta h) convention; the set is symmetric, so it equals the
// +2 beta h set.
ZeroSet ising_zeros_analytic(int n_sites, double j, double beta);

// XY-chain Lee-Yang zeros in the field plane:
// h = -2 J cos(2 pi k / N) + i (2m+1) pi / (2 beta), k = 0..N-1, m in m_values.
// As with the Ising form, the matching Hamiltonian flips the coupling sign:
// build_xy_jw_boundary with coupling_xy = -J.  For even N the momentum set
// is symmetric and the sign is immaterial.
ZeroSet xy_zeros_analytic(int n_sites, double j, double beta,
                          const std::vector<int>& m_values = {0});
// Same zeros mapped to the fugacity plane: z = -exp(-4 beta J cos(2 pi k/N)).
ZeroSet xy_zeros_fugacity(int n_sites, double j, double beta);

enum class Regime { IsingLike, XYLike };

// Two-site XXZ closed form.  IsingLike when cosh(2 beta J) < exp(-2 beta Jz):
// h_r = 0 and cos(2 beta h_i) = -cosh(2 beta J) exp(2 beta Jz); XYLike
// otherwise: 2 beta h_i = pi and cosh(2 beta h_r) = cosh(2 beta J)
// exp(2 beta Jz).  The boundary case is classified XYLike (zeros merged at
// beta h_i = pi/2).  Returns the two zeros with h_i > 0.
std::pair<ZeroSet, Regime> xxz2_zeros_analytic(double j, double j_z, double beta);

// Fisher zeros of the Ising ring H = J sum sz sz (N ring bonds):
// beta = -(1/4J) ln tan^2[pi (k+1/2)/N] +- i (2m+1) pi / (4J),
// k in [k_lo, k_hi], m in [m_lo, m_hi] (m >= 0; both signs emitted).
ZeroSet fisher_zeros_ising_analytic(int n_sites, double j, int k_lo, int k_hi,
                                    int m_lo, int m_hi);

// Fisher zeros of the JW-boundary XY chain: beta = -i (2m+1) pi /
// (4 J cos(2 pi k / N)).  Throws SingularMode when cos(2 pi k / N) = 0.
ZeroSet fisher_zeros_xy_analytic(int n_sites, double j, int k_lo, int k_hi,
                                 int m_lo, int m_hi);

// Field-plane zeros mapped to fugacity values exp(+2 beta h).
ZeroSet to_fugacity(const ZeroSet& field_zeros, double beta);

// |L| grid over a complex parameter plane; L(iy, ix) belongs to
// (xs[ix], ys[iy]).
struct CoherenceGrid {
  std::vector<double> xs;  // h_r (field plane) or beta_r (Fisher plane)
  std::vector<double> ys;  // theta = beta h_i, or beta_i
  MatC L;
  Plane plane = Plane::FieldH;
};

// L(h_r, theta) = sum_k p_k e^{-(beta h_r + i theta) m_k} / Z(h_r) with
// p_k the zero-field sector traces; exact for [H_s, M] = 0.
CoherenceGrid coherence_map_field(const MatC& H_s, double beta, int n_sites,
                                  const std::vector<double>& hr_values,
                                  const std::vector<double>& theta_values);

// L(beta_r + i beta_i) = Z(beta_r + i beta_i) / Z(beta_r).
CoherenceGrid coherence_map_fisher(const MatC& H0,
                                   const std::vector<double>& betar_values,
                                   const std::vector<double>& betai_values);

struct GridMinimum {
  int ix = 0, iy = 0;
  double x = 0.0, y = 0.0;
  double abs_l = 0.0;
};

// Zero candidates of a sampled 1D complex trace: sign changes of Re L refined
// by linear interpolation, plus strict interior minima of |L| refined by a
// three-point parabola on |L|^2, both accepted only when the refined |L| or
// grid |L| is below `threshold`.  Parabolic candidates within one grid step
// of a sign-change root are dropped; remaining candidates closer than half a
// grid step are merged.  xs must be strictly increasing.
std::vector<double> zero_candidates_1d(const std::vector<double>& xs,
                                       const std::vector<cplx>& ls,
                                       double threshold);

// Interior strict local minima of |L| below `threshold` (8-neighborhood).
std::vector<GridMinimum> grid_minima(const CoherenceGrid& grid, double threshold);

// Symmetric Hausdorff distance between two point sets.
double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace pfz
