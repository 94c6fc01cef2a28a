// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "pfz/errors.hpp"
#include "pfz/exact.hpp"
#include "pfz/hamiltonian.hpp"
#include "pfz/reconstruct.hpp"
#include "pfz/types.hpp"

using pfz::cplx;
using pfz::CompletionOptions;
using pfz::FugacityConvention;
using pfz::MatC;
using pfz::Plane;
using pfz::Provenance;
using pfz::ZeroSet;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  return xs;
}

ZeroSet field_set(std::vector<cplx> zeros) {
  ZeroSet zs;
  zs.zeros = std::move(zeros);
  zs.plane = Plane::FieldH;
  zs.provenance = Provenance::CircuitSweep;
  return zs;
}

// Reference: F(h) from dense diagonalization of H_s + h M.
std::vector<double> exact_free_energy(const MatC& H_s, int n, double beta,
                                      const std::vector<double>& hs) {
  const MatC M = pfz::build_magnetization(n);
  std::vector<double> f;
  f.reserve(hs.size());
  for (double h : hs) f.push_back(pfz::free_energy(H_s + h * M, beta));
  return f;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("complete_zeros maps field zeros into the fugacity plane") {
  const double beta = 2.0;
  const cplx h(0.1, 0.3);
  const ZeroSet out = pfz::complete_zeros(field_set({h}), beta);
  REQUIRE(out.zeros.size() == 2);
  const cplx want = std::exp(2.0 * beta * h.real()) * std::exp(cplx(0.0, 2.0 * beta * h.imag()));
  CHECK(std::abs(out.zeros[0] - want) < 1e-14);
  CHECK(out.zeros[1] == std::conj(out.zeros[0]));
  CHECK(out.plane == Plane::FugacityZ);
  CHECK(out.convention == FugacityConvention::ZPlus2BetaH);
  CHECK(out.provenance == Provenance::CircuitSweep);
}

TEST_CASE("complete_zeros dedupes repeats and averages conjugate partners") {
  const double beta = 1.0;
  const cplx h(0.2, 0.5);
  // Two copies of h plus a slightly perturbed mirror image of it.
  const cplx mirror = std::conj(h) + cplx(3e-9, -2e-9);
  const ZeroSet out = pfz::complete_zeros(field_set({h, h + cplx(1e-10, 0.0), mirror}), beta);
  REQUIRE(out.zeros.size() == 2);
  CHECK(out.zeros[1] == std::conj(out.zeros[0]));  // exact closure after averaging
  const cplx want = std::exp(2.0 * beta * h);
  CHECK(std::abs(out.zeros[0] - want) < 1e-7);
}

TEST_CASE("complete_zeros snaps near-critical angles onto the real axis") {
  const double beta = 4.0;
  const double hr = 0.15;
  const cplx h(hr, 0.5 * kPi / beta + 0.004 / beta);  // theta = pi/2 + 0.004

  CompletionOptions snap;
  snap.snap_theta_tol = 0.01;
  const ZeroSet snapped = pfz::complete_zeros(field_set({h}), beta, snap);
  REQUIRE(snapped.zeros.size() == 1);
  CHECK(snapped.zeros[0].imag() == 0.0);
  CHECK(snapped.zeros[0].real() == doctest::Approx(-std::exp(2.0 * beta * hr)).epsilon(1e-12));

  const ZeroSet loose = pfz::complete_zeros(field_set({h}), beta);
  CHECK(loose.zeros.size() == 2);  // unsnapped: genuine conjugate pair
  CHECK(std::abs(loose.zeros[0].imag()) > 1e-4);

  // Real-axis fields collapse to a single real fugacity zero.
  const ZeroSet real_axis = pfz::complete_zeros(field_set({cplx(0.3, 0.0)}), beta);
  REQUIRE(real_axis.zeros.size() == 1);
  CHECK(real_axis.zeros[0] == cplx(std::exp(2.0 * beta * 0.3), 0.0));
}

TEST_CASE("complete_zeros validates its input") {
  ZeroSet fug;
  fug.plane = Plane::FugacityZ;
  fug.zeros = {cplx(1.0, 0.0)};
  CHECK_THROWS_AS(pfz::complete_zeros(fug, 1.0), pfz::PlaneMismatch);
  CHECK_THROWS_AS(pfz::complete_zeros(field_set({cplx(0, 1)}), 0.0), pfz::ConfigError);
  CHECK_THROWS_AS(pfz::complete_zeros(field_set({cplx(0, 1)}), -2.0), pfz::ConfigError);
}

TEST_CASE("polynomial zeros rebuild the ising ring free energy") {
  const int n = 4;
  const double beta = 0.8;
  const MatC H = pfz::build_ising_ring(n, -1.0);
  const auto hs = linspace(-1.2, 1.2, 21);
  const auto f_ref = exact_free_energy(H, n, beta, hs);
  const auto traces = pfz::sector_traces(H, beta, n);

  const ZeroSet plus = pfz::leeyang_zeros_polynomial(H, beta, n);
  const auto f_plus = pfz::reconstruct_free_energy(plus, std::log(traces.back()), beta, n, hs);
  CHECK(max_abs_diff(f_plus, f_ref) < 1e-8);

  // The closed-form set is stated in the mirrored convention; its leading
  // coefficient is the all-up sector weight.
  const ZeroSet minus = pfz::ising_zeros_analytic(n, 1.0, beta);
  REQUIRE(minus.convention == FugacityConvention::ZMinus2BetaH);
  const auto f_minus =
      pfz::reconstruct_free_energy(minus, std::log(traces.front()), beta, n, hs);
  CHECK(max_abs_diff(f_minus, f_ref) < 1e-8);
}

TEST_CASE("polynomial zeros rebuild the xxz free energy") {
  pfz::SpinChainSpec spec;
  spec.n_sites = 3;
  spec.coupling_xy = 0.7;
  spec.coupling_z = -0.4;
  const double beta = 1.1;
  const MatC H = pfz::build_xxz(spec);
  const auto hs = linspace(-1.0, 1.0, 15);
  const auto f_ref = exact_free_energy(H, spec.n_sites, beta, hs);
  const ZeroSet zeros = pfz::leeyang_zeros_polynomial(H, beta, spec.n_sites);
  const double ln_pref = std::log(pfz::sector_traces(H, beta, spec.n_sites).back());
  const auto f = pfz::reconstruct_free_energy(zeros, ln_pref, beta, spec.n_sites, hs);
  CHECK(max_abs_diff(f, f_ref) < 1e-8);
}

TEST_CASE("closed-form two-site zeros round trip through completion") {
  const double beta = 10.0;
  const auto hs = linspace(-0.3, 0.3, 13);

  for (double j : {0.9, 1.2}) {
    CAPTURE(j);
    pfz::SpinChainSpec spec;
    spec.n_sites = 2;
    spec.coupling_xy = j;
    spec.coupling_z = -1.0;
    const MatC H = pfz::build_xxz(spec);
    const auto [field_zeros, regime] = pfz::xxz2_zeros_analytic(j, -1.0, beta);
    const pfz::Regime want = j == 0.9 ? pfz::Regime::IsingLike : pfz::Regime::XYLike;
    CHECK(regime == want);

    const ZeroSet fug = pfz::complete_zeros(field_zeros, beta);
    REQUIRE(fug.zeros.size() == 2);
    if (regime == pfz::Regime::XYLike) {
      // theta = pi/2 exactly: both zeros land on the negative real axis.
      CHECK(fug.zeros[0].imag() == 0.0);
      CHECK(fug.zeros[0].real() < 0.0);
      CHECK(fug.zeros[1].imag() == 0.0);
    } else {
      CHECK(fug.zeros[1] == std::conj(fug.zeros[0]));
      CHECK(std::abs(std::abs(fug.zeros[0]) - 1.0) < 1e-12);
    }

    const double ln_pref = std::log(pfz::sector_traces(H, beta, 2).back());
    const auto f = pfz::reconstruct_free_energy(fug, ln_pref, beta, 2, hs);
    const auto f_ref = exact_free_energy(H, 2, beta, hs);
    CHECK(max_abs_diff(f, f_ref) < 1e-8);
  }
}

TEST_CASE("reconstruction rejects sets that break positivity") {
  ZeroSet zs;
  zs.plane = Plane::FugacityZ;

  // A lone complex zero has no conjugate partner: Z picks up a phase.
  zs.zeros = {cplx(0.4, 0.9)};
  CHECK_THROWS_AS(pfz::reconstruct_free_energy(zs, 0.0, 1.0, 2, {0.1}),
                  pfz::NonPositivePartition);

  // One real zero above z(h): a single negative factor.
  zs.zeros = {cplx(2.0, 0.0)};
  CHECK_THROWS_AS(pfz::reconstruct_free_energy(zs, 0.0, 1.0, 2, {0.0}),
                  pfz::NonPositivePartition);

  // Evaluation point exactly on a zero.
  zs.zeros = {cplx(1.0, 0.0)};
  CHECK_THROWS_AS(pfz::reconstruct_free_energy(zs, 0.0, 1.0, 2, {0.0}),
                  pfz::NonPositivePartition);

  // A double real zero keeps Z positive: F = -(ln p)/beta at h = 0.
  zs.zeros = {cplx(2.0, 0.0), cplx(2.0, 0.0)};
  const double beta = 1.5;
  const auto f = pfz::reconstruct_free_energy(zs, std::log(3.0), beta, 2, {0.0});
  REQUIRE(f.size() == 1);
  CHECK(f[0] == doctest::Approx(-std::log(3.0) / beta).epsilon(1e-12));

  ZeroSet field;
  field.plane = Plane::FieldH;
  field.zeros = {cplx(0.0, 1.0)};
  CHECK_THROWS_AS(pfz::reconstruct_free_energy(field, 0.0, 1.0, 2, {0.0}),
                  pfz::PlaneMismatch);
  zs.zeros = {cplx(2.0, 0.0), cplx(2.0, 0.0)};
  CHECK_THROWS_AS(pfz::reconstruct_free_energy(zs, 0.0, 0.0, 2, {0.0}), pfz::ConfigError);
  CHECK(pfz::reconstruct_free_energy(zs, 0.0, 1.0, 2, {}).empty());
}

TEST_CASE("fit_prefactor_offset recovers the leading sector weight") {
  pfz::SpinChainSpec spec;
  spec.n_sites = 3;
  spec.coupling_xy = 0.7;
  spec.coupling_z = -0.4;
  const double beta = 1.1;
  const MatC H = pfz::build_xxz(spec);
  const auto hs = linspace(-0.8, 0.8, 9);
  const auto f_ref = exact_free_energy(H, spec.n_sites, beta, hs);
  const ZeroSet zeros = pfz::leeyang_zeros_polynomial(H, beta, spec.n_sites);

  const double fitted = pfz::fit_prefactor_offset(zeros, beta, spec.n_sites, hs, f_ref);
  const double truth = std::log(pfz::sector_traces(H, beta, spec.n_sites).back());
  CHECK(fitted == doctest::Approx(truth).epsilon(1e-8));

  // And the fitted offset feeds back into a faithful reconstruction.
  const auto f = pfz::reconstruct_free_energy(zeros, fitted, beta, spec.n_sites, hs);
  CHECK(max_abs_diff(f, f_ref) < 1e-7);

  ZeroSet field;
  field.plane = Plane::FieldH;
  field.zeros = {cplx(0.0, 1.0)};
  CHECK_THROWS_AS(pfz::fit_prefactor_offset(field, beta, 3, hs, f_ref), pfz::PlaneMismatch);
  CHECK_THROWS_AS(pfz::fit_prefactor_offset(zeros, beta, 3, {}, {}), pfz::ConfigError);
  CHECK_THROWS_AS(pfz::fit_prefactor_offset(zeros, beta, 3, hs, {1.0}), pfz::ConfigError);
}
