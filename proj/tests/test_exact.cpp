// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "pfz/errors.hpp"
#include "pfz/exact.hpp"
#include "pfz/hamiltonian.hpp"
#include "pfz/util.hpp"

namespace {

using pfz::cplx;
using pfz::MatC;

MatC random_hermitian(Eigen::Index dim, std::uint64_t seed) {
  pfz::Rng rng{seed};
  MatC a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      a(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  return 0.5 * (a + a.adjoint().eval());
}

pfz::SpinChainSpec xxz3() {
  pfz::SpinChainSpec spec;
  spec.n_sites = 3;
  spec.coupling_xy = 0.7;
  spec.coupling_z = -0.4;
  return spec;
}

std::vector<cplx> values(const pfz::ZeroSet& zs) { return zs.zeros; }

}  // namespace

TEST_CASE("diagonalize reconstructs the operator") {
  const MatC H = random_hermitian(6, 3);
  const pfz::Eigensystem es = pfz::diagonalize(H);
  const MatC rebuilt =
      es.evecs * es.evals.asDiagonal().toDenseMatrix().cast<cplx>() * es.evecs.adjoint();
  CHECK((rebuilt - H).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((es.evecs.adjoint() * es.evecs - MatC::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);

  MatC bad = H;
  bad(0, 1) += cplx(0.0, 1.0);
  CHECK_THROWS_AS(pfz::check_hermitian(bad), pfz::ConfigError);
}

TEST_CASE("partition function, free energy, thermal state") {
  const MatC H = pfz::build_xxz(xxz3());
  const double beta = 1.3;

  const MatC expm = ((-beta) * H).exp();
  CHECK(std::abs(pfz::partition_function(H, cplx(beta, 0.0)) - expm.trace()) <
        1e-12 * std::abs(expm.trace()));

  const cplx bc(0.4, 1.1);
  const MatC expc = ((-bc) * H).exp();
  CHECK(std::abs(pfz::partition_function(H, bc) - expc.trace()) < 1e-12 * expm.trace().real());

  const double f = pfz::free_energy(H, beta);
  CHECK(f == doctest::Approx(-std::log(expm.trace().real()) / beta).epsilon(1e-12));

  const MatC rho = pfz::thermal_density_matrix(H, beta);
  CHECK(std::abs(rho.trace() - cplx(1, 0)) < 1e-12);
  CHECK((rho - expm / expm.trace()).cwiseAbs().maxCoeff() < 1e-12);

  CHECK_THROWS_AS(pfz::free_energy(H, 0.0), pfz::ConfigError);
}

TEST_CASE("sector traces match the projector reference") {
  const MatC H = pfz::build_xxz(xxz3());
  const int n = 3;
  const double beta = 0.9;

  const std::vector<double> p = pfz::sector_traces(H, beta, n);
  REQUIRE(p.size() == static_cast<std::size_t>(n) + 1);

  const MatC expm = ((-beta) * H).exp();
  for (int k = 0; k <= n; ++k) {
    cplx want(0, 0);
    for (Eigen::Index s = 0; s < expm.rows(); ++s) {
      int down = 0;
      for (int q = 0; q < n; ++q) down += (s >> (n - 1 - q)) & 1;
      if (down == k) want += expm(s, s);
    }
    CHECK(p[static_cast<std::size_t>(k)] ==
          doctest::Approx(want.real()).epsilon(1e-12));
    CHECK(p[static_cast<std::size_t>(k)] > 0.0);
  }

  double total = 0.0;
  for (double pk : p) total += pk;
  CHECK(total == doctest::Approx(expm.trace().real()).epsilon(1e-12));

  // The weights cache reproduces traces at a second temperature.
  const pfz::SectorWeights sw = pfz::sector_weights(H, n);
  const std::vector<double> p2 = pfz::sector_traces(sw, 2.4);
  const std::vector<double> p2_direct = pfz::sector_traces(H, 2.4, n);
  for (std::size_t k = 0; k < p2.size(); ++k) {
    CHECK(p2[k] == doctest::Approx(p2_direct[k]).epsilon(1e-12));
  }

  CHECK_THROWS_AS(pfz::sector_weights(H, 2), pfz::ConfigError);
}

TEST_CASE("sector weights reject operators that break magnetization") {
  pfz::SpinChainSpec spec = xxz3();
  MatC H = pfz::build_xxz(spec);
  H(0, 3) += 0.2;  // |000> <-> |011> changes n_down
  H(3, 0) += 0.2;
  CHECK_THROWS_AS(pfz::sector_weights(H, 3), pfz::NonCommutingOperators);
}

TEST_CASE("coherence_exact matches the dense definition") {
  pfz::SpinChainSpec spec = xxz3();
  spec.field_real = 0.15;
  const MatC H0 = pfz::build_xxz(spec);
  const MatC M = pfz::build_magnetization(3);
  const double beta = 1.7;

  for (double theta : {0.0, 0.31, 1.57, 2.9}) {
    const MatC num = ((-beta) * H0 - cplx(0, theta) * M).exp();
    const MatC den = ((-beta) * H0).exp();
    const cplx want = num.trace() / den.trace();
    CHECK(std::abs(pfz::coherence_exact(H0, M, beta, theta) - want) < 1e-12);
  }
  CHECK(std::abs(pfz::coherence_exact(H0, M, beta, 0.0) - cplx(1, 0)) < 1e-13);

  // Basis independence: conjugating both operators by a unitary exercises the
  // non-diagonal branch and must leave L unchanged.
  const MatC A = random_hermitian(8, 17);
  const MatC U = (cplx(0, 1) * A).exp();
  const MatC H0u = U * H0 * U.adjoint();
  const MatC Mu = U * M * U.adjoint();
  const cplx a = pfz::coherence_exact(H0, M, beta, 0.9);
  const cplx b = pfz::coherence_exact(H0u, Mu, beta, 0.9);
  CHECK(std::abs(a - b) < 1e-10);

  // A single-site sz does not commute with the flip-flop terms.
  MatC bad = MatC::Zero(8, 8);
  for (Eigen::Index s = 0; s < 8; ++s) bad(s, s) = (s & 4) ? -1.0 : 1.0;
  CHECK_THROWS_AS(pfz::coherence_exact(H0, bad, beta, 0.5), pfz::NonCommutingOperators);
}

TEST_CASE("polynomial roots") {
  // (z - 1)(z - 2)(z + 3) = z^3 - 7 z + 6
  const std::vector<cplx> got = pfz::polynomial_roots({6.0, -7.0, 0.0, 1.0});
  const std::vector<cplx> want = {cplx(1, 0), cplx(2, 0), cplx(-3, 0)};
  CHECK(pfz::hausdorff(got, want) < 1e-10);

  const std::vector<cplx> pair = pfz::polynomial_roots({1.0, 0.0, 1.0});
  CHECK(pfz::hausdorff(pair, {cplx(0, 1), cplx(0, -1)}) < 1e-12);

  CHECK_THROWS_AS(pfz::polynomial_roots({1.0, 2.0, 0.0}), pfz::IllConditionedPolynomial);
  CHECK(pfz::polynomial_roots({1.0}).empty());  // a nonzero constant has no roots
  CHECK_THROWS_AS(pfz::polynomial_roots({1.0, std::nan("")}),
                  pfz::IllConditionedPolynomial);
  // sqrt(2) is irrational, so the residual of z^2 - 2 can never reach 1e-18.
  CHECK_THROWS_AS(pfz::polynomial_roots({-2.0, 0.0, 1.0}, 1e-18),
                  pfz::IllConditionedPolynomial);
}

TEST_CASE("Ising ring zeros: closed form vs sector polynomial") {
  for (int n : {2, 3, 4, 6}) {
    const double j = 1.0, beta = 0.7;
    const pfz::ZeroSet analytic = pfz::ising_zeros_analytic(n, j, beta);
    REQUIRE(analytic.zeros.size() == static_cast<std::size_t>(n));
    for (const cplx& z : analytic.zeros) {
      CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
    }
    const pfz::ZeroSet poly =
        pfz::leeyang_zeros_polynomial(pfz::build_ising_ring(n, -j), beta, n);
    CHECK(pfz::hausdorff(values(analytic), values(poly)) < 1e-8);
  }
  CHECK_THROWS_AS(pfz::ising_zeros_analytic(4, -1.0, 0.7), pfz::ConfigError);
}

TEST_CASE("XY chain zeros: closed form vs sector polynomial") {
  for (int n : {4, 5}) {
    const double j = 0.8, beta = 0.9;
    // As with the Ising closed form, the analytic set for coupling J belongs
    // to the chain built with coupling -J; for even N the two spectra agree.
    pfz::SpinChainSpec spec;
    spec.n_sites = n;
    spec.coupling_xy = -j;
    spec.boundary = pfz::Boundary::JwBoundary;
    const pfz::ZeroSet poly =
        pfz::leeyang_zeros_polynomial(pfz::build_xy_jw_boundary(spec), beta, n);
    const pfz::ZeroSet analytic = pfz::xy_zeros_fugacity(n, j, beta);
    // Momentum pairs k and N-k coincide, so the polynomial has double roots;
    // those cost half the working precision.
    CHECK(pfz::hausdorff(values(analytic), values(poly)) < 1e-6);
  }

  // Field-plane form: real parts are -2J cos(2 pi k / N), imaginary part is
  // the first Matsubara line.
  const pfz::ZeroSet field = pfz::xy_zeros_analytic(4, 0.8, 2.0);
  REQUIRE(field.zeros.size() == 4);
  CHECK(field.plane == pfz::Plane::FieldH);
  for (const cplx& h : field.zeros) {
    CHECK(h.imag() == doctest::Approx(pfz::kPi / 4.0));  // pi / (2 beta)
  }
  std::vector<double> res;
  for (const cplx& h : field.zeros) res.push_back(h.real());
  std::sort(res.begin(), res.end());
  CHECK(res[0] == doctest::Approx(-1.6));
  CHECK(res[3] == doctest::Approx(1.6));
}

TEST_CASE("two-site XXZ closed form: regimes and values") {
  const double beta = 10.0, jz = -1.0;
  for (double j : {0.90, 0.96, 1.03}) {
    const auto [zs, regime] = pfz::xxz2_zeros_analytic(j, jz, beta);
    CHECK(regime == pfz::Regime::IsingLike);
    REQUIRE(zs.zeros.size() == 2);
    for (const cplx& h : zs.zeros) {
      CHECK(h.real() == 0.0);
      CHECK(h.imag() > 0.0);
    }
  }
  for (double j : {1.06, 1.15, 1.20}) {
    const auto [zs, regime] = pfz::xxz2_zeros_analytic(j, jz, beta);
    CHECK(regime == pfz::Regime::XYLike);
    REQUIRE(zs.zeros.size() == 2);
    CHECK(zs.zeros[0].imag() == doctest::Approx(pfz::kPi / (2 * beta)));
    CHECK(zs.zeros[0].real() == doctest::Approx(-zs.zeros[1].real()));
  }

  // Against the sector polynomial of the two-site chain, in the fugacity plane.
  for (double j : {0.90, 1.06, 1.20}) {
    pfz::SpinChainSpec spec;
    spec.n_sites = 2;
    spec.coupling_xy = j;
    spec.coupling_z = jz;
    const pfz::ZeroSet poly = pfz::leeyang_zeros_polynomial(pfz::build_xxz(spec), beta, 2);
    const auto [field, regime] = pfz::xxz2_zeros_analytic(j, jz, beta);
    const pfz::ZeroSet fug = pfz::to_fugacity(field, beta);
    CHECK(pfz::hausdorff(values(fug), values(poly)) < 1e-8);
  }

  // Classification flips across cosh(2 beta J) = exp(-2 beta Jz); theta is
  // continuous through pi/2 there.  The deviation from pi/2 grows like the
  // square root of the distance to the threshold, so probe right next to
  // J* = arccosh(e^2)/2 = 1.344334.
  const double b1 = 1.0;
  const auto [low, r_low] = pfz::xxz2_zeros_analytic(1.3442, -1.0, b1);
  const auto [high, r_high] = pfz::xxz2_zeros_analytic(1.3446, -1.0, b1);
  CHECK(r_low == pfz::Regime::IsingLike);
  CHECK(r_high == pfz::Regime::XYLike);
  CHECK(b1 * low.zeros[0].imag() == doctest::Approx(pfz::kPi / 2).epsilon(0.02));
  CHECK(std::abs(high.zeros[0].real()) < 0.02);
}

TEST_CASE("Fisher zeros annihilate the partition function") {
  {
    const int n = 4;
    const double j = 1.0;
    const MatC H = pfz::build_ising_ring(n, j);
    const pfz::ZeroSet zs = pfz::fisher_zeros_ising_analytic(n, j, 0, n - 1, 0, 1);
    REQUIRE(zs.zeros.size() == static_cast<std::size_t>(2 * n * 2));
    CHECK(zs.plane == pfz::Plane::InverseTemperature);
    const pfz::Eigensystem es = pfz::diagonalize(H);
    for (const cplx& b : zs.zeros) {
      cplx z(0, 0);
      double scale = 0.0;
      for (Eigen::Index i = 0; i < es.evals.size(); ++i) {
        const cplx term = std::exp(-b * es.evals[i]);
        z += term;
        scale += std::abs(term);
      }
      CHECK(std::abs(z) < 1e-10 * scale);
    }
    CHECK_THROWS_AS(pfz::fisher_zeros_ising_analytic(3, 1.0, 1, 1, 0, 0),
                    pfz::SingularMode);
  }
  {
    const int n = 5;
    const double j = 0.8;
    pfz::SpinChainSpec spec;
    spec.n_sites = n;
    spec.coupling_xy = j;
    spec.boundary = pfz::Boundary::JwBoundary;
    const MatC H = pfz::build_xy_jw_boundary(spec);
    const pfz::ZeroSet zs = pfz::fisher_zeros_xy_analytic(n, j, 0, n - 1, 0, 1);
    const pfz::Eigensystem es = pfz::diagonalize(H);
    for (const cplx& b : zs.zeros) {
      CHECK(b.real() == 0.0);
      cplx z(0, 0);
      double scale = 0.0;
      for (Eigen::Index i = 0; i < es.evals.size(); ++i) {
        const cplx term = std::exp(-b * es.evals[i]);
        z += term;
        scale += std::abs(term);
      }
      CHECK(std::abs(z) < 1e-10 * scale);
    }
    CHECK_THROWS_AS(pfz::fisher_zeros_xy_analytic(4, 1.0, 1, 1, 0, 0), pfz::SingularMode);
  }
}

TEST_CASE("to_fugacity maps the field plane") {
  pfz::ZeroSet field;
  field.plane = pfz::Plane::FieldH;
  field.zeros = {cplx(0.1, 0.2)};
  const pfz::ZeroSet fug = pfz::to_fugacity(field, 2.0);
  CHECK(fug.plane == pfz::Plane::FugacityZ);
  CHECK(fug.convention == pfz::FugacityConvention::ZPlus2BetaH);
  CHECK(std::abs(fug.zeros[0] - std::exp(cplx(0.4, 0.8))) < 1e-14);

  pfz::ZeroSet wrong = fug;
  CHECK_THROWS_AS(pfz::to_fugacity(wrong, 2.0), pfz::PlaneMismatch);
}

TEST_CASE("field-plane coherence map matches coherence_exact") {
  const MatC H_s = pfz::build_xxz(xxz3());
  const MatC M = pfz::build_magnetization(3);
  const double beta = 1.2;
  const std::vector<double> hrs = {-0.5, -0.1, 0.0, 0.3, 0.8};
  const std::vector<double> thetas = {0.0, 0.4, 0.9, 1.6, 2.2, 2.9, 3.1};
  const pfz::CoherenceGrid grid = pfz::coherence_map_field(H_s, beta, 3, hrs, thetas);
  REQUIRE(grid.xs == hrs);
  REQUIRE(grid.ys == thetas);
  REQUIRE(grid.L.rows() == static_cast<Eigen::Index>(thetas.size()));
  REQUIRE(grid.L.cols() == static_cast<Eigen::Index>(hrs.size()));
  for (std::size_t ix = 0; ix < hrs.size(); ++ix) {
    const MatC H0 = H_s + hrs[ix] * M;
    for (std::size_t iy = 0; iy < thetas.size(); ++iy) {
      const cplx want = pfz::coherence_exact(H0, M, beta, thetas[iy]);
      CHECK(std::abs(grid.L(static_cast<Eigen::Index>(iy), static_cast<Eigen::Index>(ix)) -
                     want) < 1e-12);
    }
  }
}

TEST_CASE("Fisher coherence map is the partition-function ratio") {
  const MatC H = pfz::build_xxz(xxz3());
  const std::vector<double> brs = {-0.3, 0.0, 0.4};
  const std::vector<double> bis = {0.0, 0.7, 1.9};
  const pfz::CoherenceGrid grid = pfz::coherence_map_fisher(H, brs, bis);
  CHECK(grid.plane == pfz::Plane::InverseTemperature);
  for (std::size_t ix = 0; ix < brs.size(); ++ix) {
    for (std::size_t iy = 0; iy < bis.size(); ++iy) {
      const cplx want = pfz::partition_function(H, cplx(brs[ix], bis[iy])) /
                        pfz::partition_function(H, cplx(brs[ix], 0.0));
      CHECK(std::abs(grid.L(static_cast<Eigen::Index>(iy), static_cast<Eigen::Index>(ix)) -
                     want) < 1e-12);
    }
  }
}

TEST_CASE("grid minima finds interior zeros") {
  pfz::CoherenceGrid grid;
  const int npts = 21;
  for (int i = 0; i < npts; ++i) {
    grid.xs.push_back(-1.0 + 2.0 * i / (npts - 1));
    grid.ys.push_back(-1.0 + 2.0 * i / (npts - 1));
  }
  grid.L.resize(npts, npts);
  // Keep the zero off the grid nodes so |L| stays positive at the minimum.
  const cplx z0(0.33, 0.41);
  for (int iy = 0; iy < npts; ++iy) {
    for (int ix = 0; ix < npts; ++ix) {
      grid.L(iy, ix) = cplx(grid.xs[static_cast<std::size_t>(ix)],
                            grid.ys[static_cast<std::size_t>(iy)]) -
                       z0;
    }
  }
  const std::vector<pfz::GridMinimum> mins = pfz::grid_minima(grid, 0.2);
  REQUIRE(mins.size() == 1);
  CHECK(std::abs(mins[0].x - 0.33) < 0.1 + 1e-12);
  CHECK(std::abs(mins[0].y - 0.41) < 0.1 + 1e-12);
  CHECK(mins[0].abs_l < 0.2);

  // A tight threshold rejects it.
  CHECK(pfz::grid_minima(grid, 1e-6).empty());
}

TEST_CASE("1D zero candidates") {
  std::vector<double> xs;
  for (int i = 0; i <= 20; ++i) xs.push_back(0.1 * i);

  // Sign changes with an exact grid hit at 0.5.
  std::vector<cplx> ls;
  for (double x : xs) ls.emplace_back((x - 0.5) * (x - 1.7), 0.0);
  std::vector<double> got = pfz::zero_candidates_1d(xs, ls, 0.05);
  REQUIRE(got.size() == 2);
  CHECK(got[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(got[1] == doctest::Approx(1.7).epsilon(1e-2));

  // A near-zero dip without a sign change is picked up by the parabola.
  ls.clear();
  for (double x : xs) ls.emplace_back((x - 1.0) * (x - 1.0) + 0.001, 0.0);
  got = pfz::zero_candidates_1d(xs, ls, 0.05);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == doctest::Approx(1.0).epsilon(1e-6));

  // Nothing below threshold: no candidates.
  ls.assign(xs.size(), cplx(1.0, 0.0));
  CHECK(pfz::zero_candidates_1d(xs, ls, 0.05).empty());

  std::vector<double> bad_xs = {0.0, 0.0, 1.0};
  std::vector<cplx> bad_ls(3, cplx(1, 0));
  CHECK_THROWS_AS(pfz::zero_candidates_1d(bad_xs, bad_ls, 0.1), pfz::ConfigError);
}

TEST_CASE("hausdorff distance") {
  CHECK(pfz::hausdorff({}, {}) == 0.0);
  CHECK(std::isinf(pfz::hausdorff({cplx(0, 0)}, {})));
  CHECK(pfz::hausdorff({cplx(0, 0), cplx(1, 0)}, {cplx(0, 0), cplx(1, 1)}) ==
        doctest::Approx(1.0));
  CHECK(pfz::hausdorff({cplx(2, 3)}, {cplx(2, 3)}) == 0.0);
}
