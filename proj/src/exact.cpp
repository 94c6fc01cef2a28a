// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include "pfz/exact.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "pfz/errors.hpp"
#include "pfz/util.hpp"

namespace pfz {

namespace {

// Magnetization N - 2 * popcount(b) of basis state b (bit set = spin down).
inline int magnetization_of(std::size_t b, int n_sites) {
  int down = 0;
  for (int q = 0; q < n_sites; ++q) down += static_cast<int>((b >> q) & 1u);
  return n_sites - 2 * down;
}

bool is_numerically_diagonal(const MatC& A, double tol) {
  const Eigen::Index dim = A.rows();
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (i != j && std::abs(A(i, j)) > tol) return false;
    }
  }
  return true;
}

}  // namespace

void check_hermitian(const MatC& H, const char* what) {
  if (H.rows() != H.cols()) {
    throw ConfigError(std::string(what) + ": matrix is not square");
  }
  const double dev = (H - H.adjoint()).cwiseAbs().maxCoeff();
  if (!(dev < 1e-12)) {
    throw ConfigError(std::string(what) + ": matrix is not Hermitian (max deviation " +
                      std::to_string(dev) + ")");
  }
}

Eigensystem diagonalize(const MatC& H) {
  check_hermitian(H, "diagonalize");
  Eigen::SelfAdjointEigenSolver<MatC> solver(H);
  if (solver.info() != Eigen::Success) {
    throw DidNotConverge("eigendecomposition failed to converge");
  }
  return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

SectorWeights sector_weights(const MatC& H_s, int n_sites) {
  check_hermitian(H_s, "sector_weights");
  const Eigen::Index dim = H_s.rows();
  if (n_sites < 1 || (Eigen::Index{1} << n_sites) != dim) {
    throw ConfigError("sector_weights: n_sites inconsistent with matrix dimension");
  }
  // [H, M] with diagonal M has entries H_ij (m_j - m_i); enforce commutation.
  double comm = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const int mi = magnetization_of(static_cast<std::size_t>(i), n_sites);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const int mj = magnetization_of(static_cast<std::size_t>(j), n_sites);
      if (mi != mj) comm = std::max(comm, std::abs(H_s(i, j)) * std::abs(double(mj - mi)));
    }
  }
  if (!(comm < 1e-10)) {
    throw NonCommutingOperators(
        "sector_weights: Hamiltonian does not commute with the magnetization");
  }

  SectorWeights sw;
  sw.n_sites = n_sites;
  sw.weights = Eigen::MatrixXd::Zero(dim, n_sites + 1);

  bool diagonal = true;
  for (Eigen::Index i = 0; i < dim && diagonal; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (i != j && std::abs(H_s(i, j)) > 1e-14) {
        diagonal = false;
        break;
      }
    }
  }

  if (diagonal) {
    sw.evals.resize(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
      sw.evals[b] = H_s(b, b).real();
      const int m = magnetization_of(static_cast<std::size_t>(b), n_sites);
      sw.weights(b, (n_sites - m) / 2) = 1.0;
    }
    return sw;
  }

  Eigensystem es = diagonalize(H_s);
  sw.evals = es.evals;
  for (Eigen::Index b = 0; b < dim; ++b) {
    const int m = magnetization_of(static_cast<std::size_t>(b), n_sites);
    const int k = (n_sites - m) / 2;
    for (Eigen::Index n = 0; n < dim; ++n) {
      sw.weights(n, k) += std::norm(es.evecs(b, n));
    }
  }
  return sw;
}

std::vector<double> sector_traces(const SectorWeights& sw, double beta) {
  std::vector<double> p(static_cast<std::size_t>(sw.n_sites) + 1, 0.0);
  for (Eigen::Index n = 0; n < sw.evals.size(); ++n) {
    const double w = std::exp(-beta * sw.evals[n]);
    for (int k = 0; k <= sw.n_sites; ++k) p[static_cast<std::size_t>(k)] += w * sw.weights(n, k);
  }
  return p;
}

std::vector<double> sector_traces(const MatC& H_s, double beta, int n_sites) {
  return sector_traces(sector_weights(H_s, n_sites), beta);
}

cplx partition_function(const MatC& H, cplx beta) {
  Eigensystem es = diagonalize(H);
  cplx z = 0.0;
  for (Eigen::Index n = 0; n < es.evals.size(); ++n) z += std::exp(-beta * es.evals[n]);
  return z;
}

double free_energy(const MatC& H, double beta) {
  if (beta <= 0.0) throw ConfigError("free_energy: beta must be positive");
  Eigensystem es = diagonalize(H);
  // Shifted log-sum-exp for stability at large beta.
  const double e0 = es.evals.minCoeff();
  double s = 0.0;
  for (Eigen::Index n = 0; n < es.evals.size(); ++n) s += std::exp(-beta * (es.evals[n] - e0));
  return e0 - std::log(s) / beta;
}

MatC thermal_density_matrix(const MatC& H, double beta) {
  Eigensystem es = diagonalize(H);
  const double e0 = es.evals.minCoeff();
  VecD w(es.evals.size());
  double z = 0.0;
  for (Eigen::Index n = 0; n < es.evals.size(); ++n) {
    w[n] = std::exp(-beta * (es.evals[n] - e0));
    z += w[n];
  }
  return es.evecs * (w / z).asDiagonal() * es.evecs.adjoint();
}

cplx coherence_exact(const MatC& H0, const MatC& M, double beta, double theta) {
  check_hermitian(H0, "coherence_exact H0");
  check_hermitian(M, "coherence_exact M");
  if (H0.rows() != M.rows()) {
    throw ConfigError("coherence_exact: operator dimensions differ");
  }
  const Eigen::Index dim = H0.rows();

  const bool m_diag = is_numerically_diagonal(M, 1e-14);
  double comm = 0.0;
  if (m_diag) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        if (i != j) comm = std::max(comm, std::abs(H0(i, j)) * std::abs(M(j, j) - M(i, i)));
      }
    }
  } else {
    comm = (H0 * M - M * H0).cwiseAbs().maxCoeff();
  }
  if (!(comm < 1e-10)) {
    throw NonCommutingOperators("coherence_exact: [H0, M] != 0");
  }

  Eigensystem es = diagonalize(H0);
  const double e0 = es.evals.minCoeff();
  cplx num = 0.0;
  double den = 0.0;
  if (m_diag) {
    // Tr[e^{-beta H0} e^{-i theta M}] = sum_n e^{-beta E_n} sum_b |V_bn|^2 e^{-i theta M_bb}
    VecC phase(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
      phase[b] = std::exp(cplx(0.0, -theta * M(b, b).real()));
    }
    for (Eigen::Index n = 0; n < dim; ++n) {
      const double w = std::exp(-beta * (es.evals[n] - e0));
      cplx acc = 0.0;
      for (Eigen::Index b = 0; b < dim; ++b) acc += std::norm(es.evecs(b, n)) * phase[b];
      num += w * acc;
      den += w;
    }
  } else {
    Eigensystem em = diagonalize(M);
    MatC overlap = es.evecs.adjoint() * em.evecs;  // B_nm = <n|mu_m>
    for (Eigen::Index n = 0; n < dim; ++n) {
      const double w = std::exp(-beta * (es.evals[n] - e0));
      cplx acc = 0.0;
      for (Eigen::Index m = 0; m < dim; ++m) {
        acc += std::norm(overlap(n, m)) * std::exp(cplx(0.0, -theta * em.evals[m]));
      }
      num += w * acc;
      den += w;
    }
  }
  return num / den;
}

std::vector<cplx> polynomial_roots(const std::vector<double>& coeffs, double residual_tol) {
  if (coeffs.size() < 2) return {};
  const std::size_t deg = coeffs.size() - 1;
  const double lead = coeffs[deg];
  if (!(std::isfinite(lead)) || lead == 0.0) {
    throw IllConditionedPolynomial("polynomial_roots: degenerate leading coefficient");
  }
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      throw IllConditionedPolynomial("polynomial_roots: non-finite coefficient");
    }
  }

  // Monic form a_k = c_k / c_deg, companion matrix with unit subdiagonal.
  std::vector<double> a(deg);
  for (std::size_t k = 0; k < deg; ++k) a[k] = coeffs[k] / lead;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg),
                                               static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i) comp(static_cast<Eigen::Index>(i),
                                             static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) comp(static_cast<Eigen::Index>(i),
                                             static_cast<Eigen::Index>(deg - 1)) = -a[i];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw IllConditionedPolynomial("polynomial_roots: companion eigensolver failed");
  }

  auto eval_monic = [&](cplx z, cplx* deriv) {
    // Horner on z^deg + a_{deg-1} z^{deg-1} + ... + a_0.
    cplx p = 1.0, dp = 0.0;
    for (std::size_t k = deg; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[k];
    }
    if (deriv != nullptr) *deriv = dp;
    return p;
  };

  std::vector<cplx> roots(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    cplx z = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
    for (int it = 0; it < 8; ++it) {
      cplx dp;
      const cplx p = eval_monic(z, &dp);
      if (std::abs(dp) < 1e-300) break;
      const cplx step = p / dp;
      z -= step;
      if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z))) break;
    }
    roots[i] = z;
  }

  for (const cplx& z : roots) {
    const double res = std::abs(eval_monic(z, nullptr));
    // Judge the residual against the evaluation scale sum_k |a_k| |z|^k, the
    // natural floor set by cancellation; an absolute test would reject any
    // polynomial whose coefficients span many orders of magnitude.
    const double az = std::abs(z);
    double scale = 1.0;
    for (std::size_t k = deg; k-- > 0;) scale = scale * az + std::abs(a[k]);
    if (res > residual_tol * scale) {
      throw IllConditionedPolynomial("polynomial_roots: relative residual " +
                                     std::to_string(res / scale) +
                                     " exceeds tolerance");
    }
  }
  return roots;
}

ZeroSet leeyang_zeros_polynomial(const MatC& H_s, double beta, int n_sites,
                                 double residual_tol) {
  std::vector<double> p = sector_traces(H_s, beta, n_sites);
  for (double pk : p) {
    if (!(pk > 0.0) || !std::isfinite(pk)) {
      throw NonPositivePartition("leeyang_zeros_polynomial: sector trace not positive");
    }
  }
  ZeroSet zs;
  zs.zeros = polynomial_roots(p, residual_tol);
  zs.plane = Plane::FugacityZ;
  zs.provenance = Provenance::PolynomialOracle;
  zs.convention = FugacityConvention::ZPlus2BetaH;
  return zs;
}

ZeroSet ising_zeros_analytic(int n_sites, double j, double beta) {
  if (n_sites < 2) throw ConfigError("ising_zeros_analytic: need n_sites >= 2");
  if (!(j > 0.0)) throw ConfigError("ising_zeros_analytic: need ferromagnetic J > 0");
  if (!(beta > 0.0)) throw ConfigError("ising_zeros_analytic: need beta > 0");
  const double e4 = std::exp(-4.0 * beta * j);
  ZeroSet zs;
  zs.plane = Plane::FugacityZ;
  zs.provenance = Provenance::Analytic;
  zs.convention = FugacityConvention::ZMinus2BetaH;
  zs.zeros.reserve(static_cast<std::size_t>(n_sites));
  for (int n = 1; n <= n_sites; ++n) {
    const double k = kPi * (2.0 * n - 1.0) / n_sites;
    const double c = std::cos(k), s = std::sin(k);
    const double re = c - e4 * (1.0 + c);
    const double disc = (1.0 - e4) * (s * s + e4 * (1.0 + c) * (1.0 + c));
    const double sign = (s >= 0.0) ? 1.0 : -1.0;
    zs.zeros.emplace_back(re, sign * std::sqrt(std::max(disc, 0.0)));
  }
  return zs;
}

ZeroSet xy_zeros_analytic(int n_sites, double j, double beta,
                          const std::vector<int>& m_values) {
  if (n_sites < 2) throw ConfigError("xy_zeros_analytic: need n_sites >= 2");
  if (!(beta > 0.0)) throw ConfigError("xy_zeros_analytic: need beta > 0");
  ZeroSet zs;
  zs.plane = Plane::FieldH;
  zs.provenance = Provenance::Analytic;
  zs.convention = FugacityConvention::ZPlus2BetaH;
  for (int k = 0; k < n_sites; ++k) {
    const double hr = -2.0 * j * std::cos(2.0 * kPi * k / n_sites);
    for (int m : m_values) {
      zs.zeros.emplace_back(hr, (2.0 * m + 1.0) * kPi / (2.0 * beta));
    }
  }
  return zs;
}

ZeroSet xy_zeros_fugacity(int n_sites, double j, double beta) {
  if (n_sites < 2) throw ConfigError("xy_zeros_fugacity: need n_sites >= 2");
  if (!(beta > 0.0)) throw ConfigError("xy_zeros_fugacity: need beta > 0");
  ZeroSet zs;
  zs.plane = Plane::FugacityZ;
  zs.provenance = Provenance::Analytic;
  zs.convention = FugacityConvention::ZPlus2BetaH;
  for (int k = 0; k < n_sites; ++k) {
    zs.zeros.emplace_back(-std::exp(-4.0 * beta * j * std::cos(2.0 * kPi * k / n_sites)), 0.0);
  }
  return zs;
}

std::pair<ZeroSet, Regime> xxz2_zeros_analytic(double j, double j_z, double beta) {
  if (!(beta > 0.0)) throw ConfigError("xxz2_zeros_analytic: need beta > 0");
  const double c2j = std::cosh(2.0 * beta * j);
  const double gap = std::exp(-2.0 * beta * j_z);
  ZeroSet zs;
  zs.plane = Plane::FieldH;
  zs.provenance = Provenance::Analytic;
  zs.convention = FugacityConvention::ZPlus2BetaH;
  Regime regime;
  if (c2j < gap) {
    regime = Regime::IsingLike;
    const double rhs = -c2j * std::exp(2.0 * beta * j_z);
    const double t1 = 0.5 * std::acos(std::clamp(rhs, -1.0, 1.0));
    zs.zeros.emplace_back(0.0, t1 / beta);
    zs.zeros.emplace_back(0.0, (kPi - t1) / beta);
  } else {
    regime = Regime::XYLike;
    const double arg = std::max(c2j * std::exp(2.0 * beta * j_z), 1.0);
    const double hr = std::acosh(arg) / (2.0 * beta);
    zs.zeros.emplace_back(hr, kPi / (2.0 * beta));
    zs.zeros.emplace_back(-hr, kPi / (2.0 * beta));
  }
  return {zs, regime};
}

ZeroSet fisher_zeros_ising_analytic(int n_sites, double j, int k_lo, int k_hi,
                                    int m_lo, int m_hi) {
  if (n_sites < 2) throw ConfigError("fisher_zeros_ising_analytic: need n_sites >= 2");
  if (j == 0.0) throw ConfigError("fisher_zeros_ising_analytic: need J != 0");
  ZeroSet zs;
  zs.plane = Plane::InverseTemperature;
  zs.provenance = Provenance::Analytic;
  zs.convention = FugacityConvention::ZPlus2BetaH;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double ang = kPi * (k + 0.5) / n_sites;
    const double t = std::tan(ang);
    if (!std::isfinite(t) || std::abs(t) < 1e-12 || std::abs(std::cos(ang)) < 1e-12) {
      throw SingularMode("fisher_zeros_ising_analytic: tangent singular for mode k=" +
                         std::to_string(k));
    }
    const double re = -std::log(t * t) / (4.0 * j);
    for (int m = m_lo; m <= m_hi; ++m) {
      const double im = (2.0 * m + 1.0) * kPi / (4.0 * j);
      zs.zeros.emplace_back(re, im);
      zs.zeros.emplace_back(re, -im);
    }
  }
  return zs;
}

ZeroSet fisher_zeros_xy_analytic(int n_sites, double j, int k_lo, int k_hi,
                                 int m_lo, int m_hi) {
  if (n_sites < 2) throw ConfigError("fisher_zeros_xy_analytic: need n_sites >= 2");
  if (j == 0.0) throw ConfigError("fisher_zeros_xy_analytic: need J != 0");
  ZeroSet zs;
  zs.plane = Plane::InverseTemperature;
  zs.provenance = Provenance::Analytic;
  zs.convention = FugacityConvention::ZPlus2BetaH;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double c = std::cos(2.0 * kPi * k / n_sites);
    if (std::abs(c) < 1e-12) {
      throw SingularMode("fisher_zeros_xy_analytic: cos(2 pi k / N) = 0 for mode k=" +
                         std::to_string(k));
    }
    for (int m = m_lo; m <= m_hi; ++m) {
      zs.zeros.emplace_back(0.0, -(2.0 * m + 1.0) * kPi / (4.0 * j * c));
    }
  }
  return zs;
}

ZeroSet to_fugacity(const ZeroSet& field_zeros, double beta) {
  if (field_zeros.plane != Plane::FieldH) {
    throw PlaneMismatch("to_fugacity: input must be field-plane zeros");
  }
  ZeroSet zs;
  zs.plane = Plane::FugacityZ;
  zs.provenance = field_zeros.provenance;
  zs.convention = FugacityConvention::ZPlus2BetaH;
  zs.zeros.reserve(field_zeros.zeros.size());
  for (const cplx& h : field_zeros.zeros) zs.zeros.push_back(std::exp(2.0 * beta * h));
  return zs;
}

CoherenceGrid coherence_map_field(const MatC& H_s, double beta, int n_sites,
                                  const std::vector<double>& hr_values,
                                  const std::vector<double>& theta_values) {
  if (!(beta > 0.0)) throw ConfigError("coherence_map_field: need beta > 0");
  SectorWeights sw = sector_weights(H_s, n_sites);
  const std::vector<double> p = sector_traces(sw, beta);

  CoherenceGrid grid;
  grid.xs = hr_values;
  grid.ys = theta_values;
  grid.plane = Plane::FieldH;
  grid.L.resize(static_cast<Eigen::Index>(theta_values.size()),
                static_cast<Eigen::Index>(hr_values.size()));
  for (std::size_t ix = 0; ix < hr_values.size(); ++ix) {
    std::vector<double> q(p.size());
    double z = 0.0;
    for (int k = 0; k <= n_sites; ++k) {
      const double m = n_sites - 2.0 * k;
      q[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k)] *
                                       std::exp(-beta * hr_values[ix] * m);
      z += q[static_cast<std::size_t>(k)];
    }
    if (!(z > 0.0) || !std::isfinite(z)) {
      throw NonPositivePartition("coherence_map_field: Z(h_r) not positive");
    }
    for (std::size_t iy = 0; iy < theta_values.size(); ++iy) {
      cplx num = 0.0;
      for (int k = 0; k <= n_sites; ++k) {
        const double m = n_sites - 2.0 * k;
        num += q[static_cast<std::size_t>(k)] * std::exp(cplx(0.0, -theta_values[iy] * m));
      }
      grid.L(static_cast<Eigen::Index>(iy), static_cast<Eigen::Index>(ix)) = num / z;
    }
  }
  return grid;
}

CoherenceGrid coherence_map_fisher(const MatC& H0,
                                   const std::vector<double>& betar_values,
                                   const std::vector<double>& betai_values) {
  Eigensystem es = diagonalize(H0);
  CoherenceGrid grid;
  grid.xs = betar_values;
  grid.ys = betai_values;
  grid.plane = Plane::InverseTemperature;
  grid.L.resize(static_cast<Eigen::Index>(betai_values.size()),
                static_cast<Eigen::Index>(betar_values.size()));
  const double e0 = es.evals.minCoeff();
  for (std::size_t ix = 0; ix < betar_values.size(); ++ix) {
    VecD w(es.evals.size());
    double z = 0.0;
    for (Eigen::Index n = 0; n < es.evals.size(); ++n) {
      w[n] = std::exp(-betar_values[ix] * (es.evals[n] - e0));
      z += w[n];
    }
    for (std::size_t iy = 0; iy < betai_values.size(); ++iy) {
      cplx num = 0.0;
      for (Eigen::Index n = 0; n < es.evals.size(); ++n) {
        num += w[n] * std::exp(cplx(0.0, -betai_values[iy] * es.evals[n]));
      }
      grid.L(static_cast<Eigen::Index>(iy), static_cast<Eigen::Index>(ix)) = num / z;
    }
  }
  return grid;
}

std::vector<GridMinimum> grid_minima(const CoherenceGrid& grid, double threshold) {
  std::vector<GridMinimum> out;
  const Eigen::Index ny = grid.L.rows(), nx = grid.L.cols();
  for (Eigen::Index iy = 1; iy + 1 < ny; ++iy) {
    for (Eigen::Index ix = 1; ix + 1 < nx; ++ix) {
      const double v = std::abs(grid.L(iy, ix));
      if (!(v < threshold)) continue;
      bool strict = true;
      for (int dy = -1; dy <= 1 && strict; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          if (!(v < std::abs(grid.L(iy + dy, ix + dx)))) {
            strict = false;
            break;
          }
        }
      }
      if (strict) {
        out.push_back(GridMinimum{static_cast<int>(ix), static_cast<int>(iy),
                                  grid.xs[static_cast<std::size_t>(ix)],
                                  grid.ys[static_cast<std::size_t>(iy)], v});
      }
    }
  }
  return out;
}

std::vector<double> zero_candidates_1d(const std::vector<double>& xs,
                                       const std::vector<cplx>& ls,
                                       double threshold) {
  if (xs.size() != ls.size()) {
    throw ConfigError("zero_candidates_1d: axis and trace lengths differ");
  }
  if (xs.size() < 2) return {};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < xs[i + 1])) {
      throw ConfigError("zero_candidates_1d: xs must be strictly increasing");
    }
  }

  struct Candidate {
    double x = 0.0;
    bool from_sign_change = false;
  };
  std::vector<Candidate> cands;

  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double r0 = ls[i].real(), r1 = ls[i + 1].real();
    if (r0 == 0.0) {
      if (std::abs(ls[i]) < threshold) cands.push_back({xs[i], true});
      continue;
    }
    if (r0 * r1 < 0.0) {
      const double s = r0 / (r0 - r1);
      const double x = xs[i] + s * (xs[i + 1] - xs[i]);
      const cplx lt = ls[i] + s * (ls[i + 1] - ls[i]);
      if (std::abs(lt) < threshold) cands.push_back({x, true});
    }
  }
  if (ls.back().real() == 0.0 && std::abs(ls.back()) < threshold) {
    cands.push_back({xs.back(), true});
  }

  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const double ya = std::norm(ls[i - 1]);
    const double yb = std::norm(ls[i]);
    const double yc = std::norm(ls[i + 1]);
    if (!(yb < ya && yb < yc && std::sqrt(yb) < threshold)) continue;
    const double xa = xs[i - 1], xb = xs[i], xc = xs[i + 1];
    const double d1 = (xb - xa) * (yb - yc);
    const double d2 = (xb - xc) * (yb - ya);
    const double denom = d1 - d2;
    double x = xb;
    if (denom != 0.0) {
      x = xb - 0.5 * ((xb - xa) * d1 - (xb - xc) * d2) / denom;
      x = std::clamp(x, xa, xc);
    }
    cands.push_back({x, false});
  }

  const double step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  std::vector<Candidate> filtered;
  for (const Candidate& c : cands) {
    if (!c.from_sign_change) {
      bool shadowed = false;
      for (const Candidate& s : cands) {
        if (s.from_sign_change && std::abs(s.x - c.x) < step) {
          shadowed = true;
          break;
        }
      }
      if (shadowed) continue;
    }
    filtered.push_back(c);
  }
  std::sort(filtered.begin(), filtered.end(),
            [](const Candidate& a, const Candidate& b) { return a.x < b.x; });
  std::vector<double> out;
  for (const Candidate& c : filtered) {
    if (!out.empty() && c.x - out.back() < 0.5 * step) continue;
    out.push_back(c.x);
  }
  return out;
}

double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.empty() || b.empty()) {
    return (a.empty() && b.empty()) ? 0.0 : std::numeric_limits<double>::infinity();
  }
  auto directed = [](const std::vector<cplx>& u, const std::vector<cplx>& v) {
    double worst = 0.0;
    for (const cplx& x : u) {
      double best = std::numeric_limits<double>::infinity();
      for (const cplx& y : v) best = std::min(best, std::abs(x - y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace pfz
