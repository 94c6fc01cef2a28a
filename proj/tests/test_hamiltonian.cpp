// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "pfz/errors.hpp"
#include "pfz/exact.hpp"
#include "pfz/hamiltonian.hpp"
#include "pfz/util.hpp"

namespace {

using pfz::cplx;
using pfz::MatC;

MatC kron(const MatC& a, const MatC& b) {
  MatC out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

MatC pauli(char which) {
  MatC m = MatC::Zero(2, 2);
  switch (which) {
    case 'x': m(0, 1) = 1, m(1, 0) = 1; break;
    case 'y': m(0, 1) = cplx(0, -1), m(1, 0) = cplx(0, 1); break;
    case 'z': m(0, 0) = 1, m(1, 1) = -1; break;
    default: m.setIdentity();
  }
  return m;
}

// Operator `which` on site q of an n-site register; site 0 is the MSB factor.
MatC site_op(char which, int q, int n) {
  MatC out = MatC::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, i == q ? pauli(which) : pauli('1'));
  return out;
}

MatC xxz_reference(const pfz::SpinChainSpec& spec) {
  const int n = spec.n_sites;
  const Eigen::Index dim = Eigen::Index{1} << n;
  MatC H = MatC::Zero(dim, dim);
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i + 1 < n; ++i) bonds.emplace_back(i, i + 1);
  if (spec.boundary == pfz::Boundary::Periodic && n >= 3) bonds.emplace_back(n - 1, 0);
  for (auto [a, b] : bonds) {
    H += spec.coupling_xy * (site_op('x', a, n) * site_op('x', b, n) +
                             site_op('y', a, n) * site_op('y', b, n));
    H += spec.coupling_z * site_op('z', a, n) * site_op('z', b, n);
  }
  for (int q = 0; q < n; ++q) H += spec.field_real * site_op('z', q, n);
  return H;
}

std::vector<double> sorted_eigs(const MatC& H) {
  Eigen::SelfAdjointEigenSolver<MatC> es(H);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("build_xxz matches the tensor-product reference") {
  for (int n : {2, 3, 4}) {
    for (pfz::Boundary b : {pfz::Boundary::Periodic, pfz::Boundary::Open}) {
      pfz::SpinChainSpec spec;
      spec.n_sites = n;
      spec.coupling_xy = 0.7;
      spec.coupling_z = -0.4;
      spec.field_real = 0.21;
      spec.boundary = b;
      const MatC got = pfz::build_xxz(spec);
      const MatC want = xxz_reference(spec);
      CHECK((got - want).cwiseAbs().maxCoeff() < 1e-13);
      CHECK_NOTHROW(pfz::check_hermitian(got));
    }
  }
}

TEST_CASE("two-site spectrum is the textbook XXZ quartet") {
  pfz::SpinChainSpec spec;
  spec.n_sites = 2;
  spec.coupling_xy = 1.3;
  spec.coupling_z = -0.8;
  const std::vector<double> eigs = sorted_eigs(pfz::build_xxz(spec));
  std::vector<double> want = {spec.coupling_z, spec.coupling_z,
                              -spec.coupling_z - 2 * spec.coupling_xy,
                              -spec.coupling_z + 2 * spec.coupling_xy};
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < 4; ++i) CHECK(eigs[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("periodic two-site chain counts the bond once") {
  pfz::SpinChainSpec p2;
  p2.n_sites = 2;
  p2.coupling_xy = 1.0;
  p2.boundary = pfz::Boundary::Periodic;
  pfz::SpinChainSpec o2 = p2;
  o2.boundary = pfz::Boundary::Open;
  CHECK((pfz::build_xxz(p2) - pfz::build_xxz(o2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("magnetization operator") {
  const MatC m = pfz::build_magnetization(3);
  CHECK(m(0, 0).real() == doctest::Approx(3.0));   // |000>
  CHECK(m(1, 1).real() == doctest::Approx(1.0));   // |001>
  CHECK(m(6, 6).real() == doctest::Approx(-1.0));  // |110>
  CHECK(m(7, 7).real() == doctest::Approx(-3.0));  // |111>
  MatC want = MatC::Zero(8, 8);
  for (int q = 0; q < 3; ++q) want += site_op('z', q, 3);
  CHECK((m - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("JW-boundary chain has free-fermion filling spectrum") {
  for (int n : {3, 4, 5}) {
    pfz::SpinChainSpec spec;
    spec.n_sites = n;
    spec.coupling_xy = 0.9;
    spec.boundary = pfz::Boundary::JwBoundary;
    const MatC H = pfz::build_xy_jw_boundary(spec);
    CHECK_NOTHROW(pfz::check_hermitian(H));

    std::vector<double> modes(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      modes[static_cast<std::size_t>(k)] =
          4.0 * spec.coupling_xy * std::cos(2.0 * pfz::kPi * k / n);
    }
    std::vector<double> want;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) {
        if (mask & (std::size_t{1} << k)) sum += modes[static_cast<std::size_t>(k)];
      }
      want.push_back(sum);
    }
    std::sort(want.begin(), want.end());
    const std::vector<double> got = sorted_eigs(H);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("JW-boundary builder validates its spec") {
  pfz::SpinChainSpec spec;
  spec.n_sites = 4;
  spec.coupling_xy = 1.0;
  spec.boundary = pfz::Boundary::Periodic;
  CHECK_THROWS_AS(pfz::build_xy_jw_boundary(spec), pfz::ConfigError);
  spec.boundary = pfz::Boundary::JwBoundary;
  spec.coupling_z = 0.5;
  CHECK_THROWS_AS(pfz::build_xy_jw_boundary(spec), pfz::ConfigError);
  spec.coupling_z = 0.0;
  CHECK_THROWS_AS(pfz::build_xxz(spec), pfz::ConfigError);
}

TEST_CASE("Ising ring counts all N bonds") {
  // N = 2 carries the doubled bond of the transfer-matrix convention.
  const MatC h2 = pfz::build_ising_ring(2, 0.7);
  CHECK(h2(0, 0).real() == doctest::Approx(1.4));
  CHECK(h2(1, 1).real() == doctest::Approx(-1.4));
  CHECK(h2(2, 2).real() == doctest::Approx(-1.4));
  CHECK(h2(3, 3).real() == doctest::Approx(1.4));
  CHECK(h2.cwiseAbs().sum() == doctest::Approx(4 * 1.4));  // diagonal only

  const MatC h3 = pfz::build_ising_ring(3, -1.0);
  CHECK(h3(0, 0).real() == doctest::Approx(-3.0));  // |000>: three aligned bonds
  CHECK(h3(1, 1).real() == doctest::Approx(1.0));   // |001>: one aligned, two broken
  CHECK(h3(7, 7).real() == doctest::Approx(-3.0));

  // For N >= 3 the ring matches build_xxz with J = 0 on the same ring.
  pfz::SpinChainSpec spec;
  spec.n_sites = 4;
  spec.coupling_z = 0.9;
  const MatC ring = pfz::build_ising_ring(4, 0.9);
  CHECK((ring - pfz::build_xxz(spec)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("size caps") {
  pfz::SpinChainSpec spec;
  spec.n_sites = 15;
  spec.coupling_xy = 1.0;
  CHECK_THROWS_AS(pfz::build_xxz(spec), pfz::DimensionOverflow);
  CHECK_THROWS_AS(pfz::build_magnetization(0), pfz::DimensionOverflow);
  CHECK_THROWS_AS(pfz::build_magnetization(11, 10), pfz::DimensionOverflow);
  CHECK_NOTHROW(pfz::build_magnetization(10, 10));
}

TEST_CASE("spin-chain config round-trip") {
  pfz::SpinChainSpec spec;
  spec.n_sites = 5;
  spec.coupling_xy = 1.25;
  spec.coupling_z = -1.0;
  spec.field_real = 0.05;
  spec.boundary = pfz::Boundary::Open;
  const pfz::SpinChainSpec back = pfz::spec_from_config_string(pfz::spec_to_config(spec));
  CHECK(back.n_sites == spec.n_sites);
  CHECK(back.coupling_xy == doctest::Approx(spec.coupling_xy));
  CHECK(back.coupling_z == doctest::Approx(spec.coupling_z));
  CHECK(back.field_real == doctest::Approx(spec.field_real));
  CHECK(back.boundary == spec.boundary);

  const pfz::SpinChainSpec partial =
      pfz::spec_from_config_string("n_sites = 3\nj = 2.0 # comment\n");
  CHECK(partial.n_sites == 3);
  CHECK(partial.coupling_xy == doctest::Approx(2.0));
  CHECK(partial.coupling_z == 0.0);
  CHECK(partial.boundary == pfz::Boundary::Periodic);

  CHECK_THROWS_AS(pfz::spec_from_config_string(""), pfz::ConfigError);
  CHECK_THROWS_AS(pfz::spec_from_config_string("bogus = 1\n"), pfz::ConfigError);
  CHECK_THROWS_AS(pfz::spec_from_config_string("j = fast\n"), pfz::ConfigError);
  CHECK_THROWS_AS(pfz::spec_from_config_string("boundary = twisted\n"), pfz::ConfigError);
}
